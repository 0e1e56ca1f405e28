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

#ifndef WEYLCALC_CLASSES_HPP
#define WEYLCALC_CLASSES_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "weylcalc/affweyl.hpp"

namespace weylcalc {

/// A straight conjugacy class, identified by (kappa, nu_bar).
struct StraightClass {
  KappaClass kappa;
  RatVector nu_bar;
  int length = 0;
  int defect = 0;

  friend bool operator==(const StraightClass& a, const StraightClass& b) {
    return a.kappa == b.kappa && a.nu_bar == b.nu_bar;
  }
  /// Canonical order: length, then nu_bar, then kappa.
  friend std::strong_ordering operator<=>(const StraightClass& a, const StraightClass& b);
};

std::string to_string(const StraightClass& c);

struct StraightClassHash {
  std::size_t operator()(const StraightClass& c) const noexcept;
};

/// One step w -> s w s.
struct ReductionStep {
  int generator;  // position in AffineWeylGroup::generators()
  AffineWeylElt before;
  AffineWeylElt after;
};

struct Reduction {
  AffineWeylElt w_min;
  std::vector<ReductionStep> path;
};

/// A length-preserving walk from w to w_prime followed by a generator s with
/// l(s w_prime s) = l(w_prime) - 2.
struct Descent {
  std::vector<ReductionStep> walk;
  AffineWeylElt w_prime;
  int generator;
};

enum class WitnessPolicy { First, Last };

struct UxDecomposition {
  AffineWeylElt u;
  AffineWeylElt x;
  std::vector<int> K;       // generator positions
  AffineWeylElt witness;    // the element u x of the approx-class
};

/// Cyclic-shift combinatorics of conjugacy classes of one extended affine
/// Weyl group. Results are memoized; the memo tables are guarded so one engine
/// can be shared by worker threads.
class ClassEngine {
 public:
  static constexpr std::size_t kDefaultBudget = 1'000'000;

  explicit ClassEngine(std::shared_ptr<const AffineWeylGroup> group, std::size_t budget = kDefaultBudget);

  const AffineWeylGroup& group() const { return *group_; }
  const std::shared_ptr<const AffineWeylGroup>& group_ptr() const { return group_; }
  const RootDatum& datum() const { return group_->datum(); }
  std::size_t budget() const { return budget_; }

  /// Elements reachable by length-preserving moves w -> s w s, sorted.
  std::vector<AffineWeylElt> approx_closure(const AffineWeylElt& w) const;
  /// nullopt iff w has minimal length in its conjugacy class.
  std::optional<Descent> find_descent(const AffineWeylElt& w, WitnessPolicy policy = WitnessPolicy::First) const;
  bool is_minimal(const AffineWeylElt& w) const { return !find_descent(w).has_value(); }
  Reduction reduce_to_min(const AffineWeylElt& w) const;
  /// Throws DecompositionNotFound if no decomposition exists.
  UxDecomposition ux_decompose(const AffineWeylElt& w_min) const;

  /// Class data of a straight element.
  StraightClass class_of_straight(const AffineWeylElt& x) const;
  StraightClass straight_class_of(const AffineWeylElt& w) const;

  /// All elements of length <= max_len, optionally restricted to one kappa,
  /// sorted by (length, element). Needs a kappa when X/Q^vee is infinite.
  std::vector<AffineWeylElt> elements_up_to_length(int max_len, const std::optional<KappaClass>& k = std::nullopt) const;
  std::vector<StraightClass> enumerate_straight_classes(int max_len, const std::optional<KappaClass>& k = std::nullopt) const;
  /// The class with the given (kappa, nu_bar), searching straight elements of
  /// length <(2 rho, nu_bar)>. Throws InvalidArgument if there is none.
  StraightClass find_class(const KappaClass& k, const RatVector& nu_bar) const;

  bool is_spherical(const std::vector<int>& K) const;
  /// Positions of spherical subsets ordered by size, then lexicographically.
  const std::vector<std::vector<int>>& spherical_subsets() const { return spherical_; }

  bool p_alcove_test(const AffineWeylElt& w, const RatVector& nu) const;

 private:
  AffineWeylElt conj(int s, const AffineWeylElt& w) const;

  std::shared_ptr<const AffineWeylGroup> group_;
  std::size_t budget_;
  std::vector<std::vector<int>> spherical_;

  mutable std::shared_mutex mu_;
  mutable std::unordered_map<AffineWeylElt, StraightClass, AffineWeylHash> class_memo_;
  mutable std::unordered_set<AffineWeylElt, AffineWeylHash> minimal_memo_;
};

}  // namespace weylcalc

#endif  // WEYLCALC_CLASSES_HPP
