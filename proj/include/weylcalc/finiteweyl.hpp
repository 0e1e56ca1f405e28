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

#ifndef WEYLCALC_FINITEWEYL_HPP
#define WEYLCALC_FINITEWEYL_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "weylcalc/linalg.hpp"
#include "weylcalc/rootdata.hpp"

namespace weylcalc {

/// Element of the finite Weyl group W0, stored as its action on X. The
/// matrix is the canonical key; reduced words are derived on demand.
/// The datum must outlive every element built from it.
class FiniteWeylElt {
 public:
  FiniteWeylElt() = default;

  static FiniteWeylElt identity(const RootDatum& d);
  static FiniteWeylElt simple_reflection(const RootDatum& d, int i);
  /// Reflection in the k-th positive root.
  static FiniteWeylElt reflection(const RootDatum& d, int k);
  /// Product s_{word[0]} s_{word[1]} ... of simple reflections (0-based).
  static FiniteWeylElt from_word(const RootDatum& d, const std::vector<int>& word);

  const RootDatum& datum() const { return *datum_; }
  const RootDatum* datum_ptr() const { return datum_; }
  const IntMatrix& matrix() const { return m_; }
  const IntMatrix& inverse_matrix() const { return inv_; }

  int length() const;
  bool is_identity() const { return m_.is_identity(); }
  /// l(s_i w) < l(w)
  bool has_left_descent(int i) const;
  /// l(w s_i) < l(w)
  bool has_right_descent(int i) const;
  /// Lexicographically first reduced word (0-based simple indices).
  std::vector<int> reduced_word() const;
  /// Lexicographically last reduced word.
  std::vector<int> reduced_word_last() const;
  int order() const;

  FiniteWeylElt inverse() const;
  IntVector apply(const IntVector& x) const { return m_.apply(x); }
  RatVector apply(const RatVector& x) const { return m_.apply(x); }
  /// w(alpha) = alpha o w^{-1} for a functional alpha.
  IntVector act_on_root(const IntVector& functional) const { return inv_.apply_left(functional); }

  friend FiniteWeylElt operator*(const FiniteWeylElt& a, const FiniteWeylElt& b);
  friend bool operator==(const FiniteWeylElt& a, const FiniteWeylElt& b) { return a.m_ == b.m_; }
  friend auto operator<=>(const FiniteWeylElt& a, const FiniteWeylElt& b) { return a.m_ <=> b.m_; }

  std::size_t hash() const noexcept { return m_.hash(); }

 private:
  FiniteWeylElt(const RootDatum* d, IntMatrix m, IntMatrix inv) : datum_(d), m_(std::move(m)), inv_(std::move(inv)) {}

  const RootDatum* datum_ = nullptr;
  IntMatrix m_;
  IntMatrix inv_;
};

struct FiniteWeylHash {
  std::size_t operator()(const FiniteWeylElt& w) const noexcept { return w.hash(); }
};

/// fw_compose / fw_inverse with datum checks.
FiniteWeylElt compose(const FiniteWeylElt& a, const FiniteWeylElt& b);
FiniteWeylElt inverse(const FiniteWeylElt& a);

/// All elements of W0 sorted by (length, matrix). Throws GroupTooLarge past cap.
std::vector<FiniteWeylElt> enumerate_w0(const RootDatum& d, std::size_t cap = 10'000'000);
FiniteWeylElt longest_element(const RootDatum& d);

/// A diagram automorphism acting on W0 by s_i -> s_{perm(i)}.
class FiniteTwist {
 public:
  static FiniteTwist identity(const RootDatum& d);
  /// The datum's own automorphism; throws InvalidArgument if it has none.
  static FiniteTwist from_datum(const RootDatum& d);

  int map(int i) const { return perm_[static_cast<std::size_t>(i)]; }
  FiniteWeylElt apply(const FiniteWeylElt& w) const;
  bool is_identity() const;

 private:
  std::vector<int> perm_;
  IntMatrix lattice_;
  IntMatrix lattice_inv_;
  const RootDatum* datum_ = nullptr;
};

struct TwistedStep {
  int simple;  // 0-based index of s
  FiniteWeylElt before;
  FiniteWeylElt after;
};

struct TwistedReduction {
  FiniteWeylElt w_min;
  std::vector<TwistedStep> path;
};

/// Walks w -> s w delta(s) without increasing length until a minimal-length
/// element of the delta-twisted class is reached.
TwistedReduction delta_reduce_to_min(const FiniteWeylElt& w, const FiniteTwist& delta);

/// Simple indices occurring in a reduced word of w.
std::vector<int> support(const FiniteWeylElt& w);
std::vector<int> supp_delta(const FiniteWeylElt& w, const FiniteTwist& delta);
bool is_elliptic_delta(const FiniteWeylElt& w, const FiniteTwist& delta);

}  // namespace weylcalc

#endif  // WEYLCALC_FINITEWEYL_HPP
