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

#ifndef WEYLCALC_AFFWEYL_HPP
#define WEYLCALC_AFFWEYL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "weylcalc/finiteweyl.hpp"
#include "weylcalc/rational.hpp"
#include "weylcalc/rootdata.hpp"

namespace weylcalc {

/// t^lambda * u in the extended affine Weyl group X x| W0.
class AffineWeylElt {
 public:
  AffineWeylElt() = default;
  AffineWeylElt(IntVector lambda, FiniteWeylElt u);

  static AffineWeylElt identity(const RootDatum& d);
  static AffineWeylElt translation(const RootDatum& d, IntVector lambda);
  static AffineWeylElt finite(const FiniteWeylElt& u);

  const IntVector& lambda() const { return lambda_; }
  const FiniteWeylElt& finite_part() const { return u_; }
  const RootDatum& datum() const { return u_.datum(); }
  bool is_identity() const;

  AffineWeylElt inverse() const;

  friend AffineWeylElt operator*(const AffineWeylElt& a, const AffineWeylElt& b);
  friend bool operator==(const AffineWeylElt& a, const AffineWeylElt& b) {
    return a.lambda_ == b.lambda_ && a.u_ == b.u_;
  }
  /// Canonical order: translation part first, then the W0 matrix.
  friend std::strong_ordering operator<=>(const AffineWeylElt& a, const AffineWeylElt& b);

  std::size_t hash() const noexcept;

 private:
  IntVector lambda_;
  FiniteWeylElt u_;
};

struct AffineWeylHash {
  std::size_t operator()(const AffineWeylElt& w) const noexcept { return w.hash(); }
};

AffineWeylElt aw_mul(const AffineWeylElt& a, const AffineWeylElt& b);
AffineWeylElt aw_inv(const AffineWeylElt& a);

/// Iwahori-Matsumoto length:
///   sum_{a>0, u^-1 a>0} |<a,lambda>| + sum_{a>0, u^-1 a<0} |<a,lambda> - 1|.
int length(const AffineWeylElt& w);

struct NewtonPoint {
  RatVector nu;
  RatVector nu_bar;
};

NewtonPoint newton_point(const AffineWeylElt& w);
bool is_straight(const AffineWeylElt& w);
/// dim V - dim{v : u(v) + lambda = v + nu_w}.
int defect(const AffineWeylElt& w);
KappaClass kappa(const AffineWeylElt& w);

/// w = x t^mu y with mu dominant, x, y in W0 and t^mu y minimal in W0 t^mu y.
struct EtaDecomposition {
  FiniteWeylElt x;
  IntVector mu;
  FiniteWeylElt y;
  FiniteWeylElt eta;  // y x
};

EtaDecomposition eta_decomposition(const AffineWeylElt& w);

/// The affine function v -> <alpha, v> + k.
struct AffineRoot {
  IntVector alpha;
  std::int64_t k = 0;

  friend bool operator==(const AffineRoot&, const AffineRoot&) = default;
};

struct Generator {
  int label;          // 1..n for finite simple reflections, 0, -1, ... for affine nodes
  std::string name;
  AffineWeylElt element;
  int simple;         // finite simple index, or -1
  int component;      // Dynkin component of an affine node, or -1
};

/// The extended affine Weyl group of a root datum, with its Coxeter
/// generators, length-zero subgroup and base alcove.
///
/// Geometric conventions: t^lambda u acts on V by v -> u(v) - lambda and the
/// base alcove lies in the antidominant chamber, {v : -1 < <a,v> < 0, a > 0}.
/// This is the orientation under which the Iwahori-Matsumoto formula above
/// counts the walls separating the base alcove from its translate; the
/// constructor checks that every generator has length one.
class AffineWeylGroup {
 public:
  explicit AffineWeylGroup(RootDatumPtr datum);

  const RootDatum& datum() const { return *datum_; }
  const RootDatumPtr& datum_ptr() const { return datum_; }

  const std::vector<Generator>& generators() const { return gens_; }
  int num_generators() const { return static_cast<int>(gens_.size()); }
  const AffineWeylElt& generator(int g) const { return gens_[static_cast<std::size_t>(g)].element; }
  /// Position in generators() of the generator with the given label.
  int generator_position(int label) const;
  /// Product of generators given by positions.
  AffineWeylElt from_generator_word(const std::vector<int>& positions) const;

  /// Connected components of the affine Coxeter diagram (generator positions).
  const std::vector<std::vector<int>>& diagram_components() const { return diagram_components_; }
  bool generators_commute(int g, int h) const;

  /// One length-zero element per class of X / Q^vee; throws InfinitePi1.
  const std::vector<AffineWeylElt>& omega_elements() const;
  /// The length-zero element in the W_af-coset with the given kappa.
  AffineWeylElt omega_element(const KappaClass& k) const;

  const RatVector& alcove_point() const { return alcove_point_; }
  bool is_positive(const AffineRoot& a) const;
  /// w . a = a o w^{-1}
  AffineRoot act(const AffineWeylElt& w, const AffineRoot& a) const;
  /// Number of positive affine roots a with w^{-1} a negative.
  int inversion_count(const AffineWeylElt& w) const;

 private:
  RootDatumPtr datum_;
  std::vector<Generator> gens_;
  std::vector<std::vector<int>> diagram_components_;
  std::vector<AffineWeylElt> omega_;
  RatVector alcove_point_;
};

}  // namespace weylcalc

#endif  // WEYLCALC_AFFWEYL_HPP
