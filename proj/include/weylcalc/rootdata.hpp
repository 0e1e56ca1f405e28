// Copyright 2026 The weylcalc Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WEYLCALC_ROOTDATA_HPP
#define WEYLCALC_ROOTDATA_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "weylcalc/linalg.hpp"
#include "weylcalc/rational.hpp"

namespace weylcalc {

/// Diagram automorphism of a root datum: a permutation of the simple
/// indices together with the lattice automorphism of X realizing it.
struct DiagramAutomorphism {
  std::vector<int> perm;  // 0-based
  IntMatrix lattice;
};

/// Class of a coweight in X / Q^vee, in Smith coordinates of the coroot
/// matrix. Component i lives in Z/m_i for the datum's pi1_moduli()[i] = m_i,
/// or in Z when m_i = 0.
struct KappaClass {
  IntVector components;

  friend bool operator==(const KappaClass&, const KappaClass&) = default;
  friend auto operator<=>(const KappaClass&, const KappaClass&) = default;
};

/// A reduced root datum of finite type on a free lattice X = Z^r.
///
/// Simple indices are 0-based in this API. Roots are stored as integer
/// functionals on X (row vectors), coroots as elements of X.
class RootDatum {
 public:
  /// Builds and validates a datum from a JSON config. Throws MalformedConfig,
  /// NotFiniteType or BadAutomorphism.
  static std::shared_ptr<const RootDatum> build(const nlohmann::json& config);
  static std::shared_ptr<const RootDatum> preset(std::string_view name);
  static nlohmann::json preset_config(std::string_view name);
  static const std::vector<std::string>& preset_names();

  nlohmann::json to_json() const;
  /// Stable 64-bit hash (hex) of the mathematical content of the datum.
  const std::string& fingerprint() const { return fingerprint_; }

  const std::string& name() const { return name_; }
  int rank() const { return rank_; }
  int semisimple_rank() const { return ss_rank_; }
  const IntMatrix& cartan() const { return cartan_; }
  const IntMatrix& coroot_matrix() const { return coroots_; }
  const IntMatrix& root_matrix() const { return roots_; }

  IntVector simple_root(int i) const { return roots_.row(i); }
  IntVector simple_coroot(int i) const { return coroots_.column(i); }

  int num_positive_roots() const { return static_cast<int>(pos_roots_.size()); }
  const std::vector<IntVector>& positive_roots() const { return pos_roots_; }
  const std::vector<IntVector>& positive_coroots() const { return pos_coroots_; }
  /// Coordinates of positive root k in the basis of simple roots.
  const IntVector& root_coordinates(int k) const { return pos_root_coords_[static_cast<std::size_t>(k)]; }
  int root_height(int k) const;
  int max_height() const { return max_height_; }

  /// Sum of positive roots (a functional) and sum of positive coroots (in X).
  const IntVector& two_rho() const { return two_rho_; }
  const IntVector& two_rho_check() const { return two_rho_check_; }
  RatVector rho() const;
  RatVector rho_check() const;

  /// Signed index of a root functional: k+1 for the k-th positive root,
  /// -(k+1) for its negative, nullopt if the functional is not a root.
  std::optional<int> root_index(const IntVector& functional) const;
  /// Sign of a root functional (positive roots pair positively with 2 rho^vee).
  bool is_positive_root(const IntVector& functional) const { return dot(functional, two_rho_check_) > 0; }

  /// Irreducible components of the Dynkin diagram, each a sorted list of
  /// simple indices; components ordered by smallest index.
  const std::vector<std::vector<int>>& components() const { return components_; }
  /// Index (into positive_roots) of the highest root of component c.
  int highest_root(int c) const { return highest_roots_[static_cast<std::size_t>(c)]; }

  const std::optional<DiagramAutomorphism>& delta() const { return delta_; }

  IntVector reflect(int i, const IntVector& x) const;
  RatVector reflect(int i, const RatVector& x) const;
  Rational pairing(const IntVector& functional, const RatVector& v) const { return dot(functional, v); }

  bool is_dominant(const RatVector& v) const;
  /// The dominant element of the W0-orbit of v.
  RatVector dominant_rep(const RatVector& v) const;
  /// Dominance order on dominant rational coweights. Throws NotDominant.
  bool dominance_leq(const RatVector& lower, const RatVector& upper) const;

  KappaClass kappa_class(const IntVector& lambda) const;
  KappaClass kappa_add(const KappaClass& a, const KappaClass& b) const;
  /// A coweight whose class is k.
  IntVector kappa_representative(const KappaClass& k) const;
  const IntVector& pi1_moduli() const { return pi1_moduli_; }
  bool pi1_finite() const;
  std::int64_t pi1_order() const;
  /// One lattice representative per element of X / Q^vee (finite case only).
  std::vector<IntVector> pi1_representatives() const;

 private:
  RootDatum() = default;
  void derive();

  std::string name_;
  int rank_ = 0;
  int ss_rank_ = 0;
  IntMatrix coroots_;  // rank x ss_rank, columns are simple coroots
  IntMatrix roots_;    // ss_rank x rank, rows are simple roots
  IntMatrix cartan_;
  std::optional<DiagramAutomorphism> delta_;

  std::vector<IntVector> pos_roots_;
  std::vector<IntVector> pos_coroots_;
  std::vector<IntVector> pos_root_coords_;
  std::unordered_map<IntVector, int, VectorHash> root_lookup_;
  IntVector two_rho_;
  IntVector two_rho_check_;
  int max_height_ = 0;
  std::vector<std::vector<int>> components_;
  std::vector<int> highest_roots_;
  SmithForm smith_;
  IntVector pi1_moduli_;
  std::string fingerprint_;
};

using RootDatumPtr = std::shared_ptr<const RootDatum>;

std::string to_string(const KappaClass& k);

struct KappaHash {
  std::size_t operator()(const KappaClass& k) const noexcept { return VectorHash{}(k.components); }
};

}  // namespace weylcalc

#endif  // WEYLCALC_ROOTDATA_HPP
