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

#include "weylcalc/finiteweyl.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_set>

namespace weylcalc {

namespace {

IntMatrix reflection_matrix(const IntVector& coroot, const IntVector& root) {
  const int r = static_cast<int>(coroot.size());
  IntMatrix m = IntMatrix::identity(r);
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      m(a, b) = checked::sub(m(a, b), checked::mul(coroot[static_cast<std::size_t>(a)], root[static_cast<std::size_t>(b)]));
  return m;
}

void check_same_datum(const FiniteWeylElt& a, const FiniteWeylElt& b) {
  if (a.datum_ptr() != b.datum_ptr()) fail(ErrorKind::DatumMismatch, "finite Weyl elements belong to different root data");
}

}  // namespace

FiniteWeylElt FiniteWeylElt::identity(const RootDatum& d) {
  return FiniteWeylElt(&d, IntMatrix::identity(d.rank()), IntMatrix::identity(d.rank()));
}

FiniteWeylElt FiniteWeylElt::simple_reflection(const RootDatum& d, int i) {
  if (i < 0 || i >= d.semisimple_rank()) fail(ErrorKind::InvalidArgument, "simple index out of range");
  IntMatrix m = reflection_matrix(d.simple_coroot(i), d.simple_root(i));
  return FiniteWeylElt(&d, m, m);
}

FiniteWeylElt FiniteWeylElt::reflection(const RootDatum& d, int k) {
  if (k < 0 || k >= d.num_positive_roots()) fail(ErrorKind::InvalidArgument, "root index out of range");
  IntMatrix m = reflection_matrix(d.positive_coroots()[static_cast<std::size_t>(k)], d.positive_roots()[static_cast<std::size_t>(k)]);
  return FiniteWeylElt(&d, m, m);
}

FiniteWeylElt FiniteWeylElt::from_word(const RootDatum& d, const std::vector<int>& word) {
  FiniteWeylElt w = identity(d);
  for (int i : word) w = w * simple_reflection(d, i);
  return w;
}

int FiniteWeylElt::length() const {
  IntVector v = m_.apply(datum_->two_rho_check());
  int len = 0;
  for (const auto& alpha : datum_->positive_roots())
    if (dot(alpha, v) < 0) ++len;
  return len;
}

bool FiniteWeylElt::has_left_descent(int i) const {
  return dot(datum_->simple_root(i), m_.apply(datum_->two_rho_check())) < 0;
}

bool FiniteWeylElt::has_right_descent(int i) const {
  return dot(datum_->two_rho(), m_.apply(datum_->simple_coroot(i))) < 0;
}

std::vector<int> FiniteWeylElt::reduced_word() const {
  std::vector<int> word;
  FiniteWeylElt cur = *this;
  const int n = datum_->semisimple_rank();
  while (!cur.is_identity()) {
    int i = 0;
    while (i < n && !cur.has_left_descent(i)) ++i;
    if (i == n) fail(ErrorKind::Internal, "nonidentity element without a left descent");
    word.push_back(i);
    cur = simple_reflection(*datum_, i) * cur;
  }
  return word;
}

std::vector<int> FiniteWeylElt::reduced_word_last() const {
  std::vector<int> word;
  FiniteWeylElt cur = *this;
  const int n = datum_->semisimple_rank();
  while (!cur.is_identity()) {
    int i = n - 1;
    while (i >= 0 && !cur.has_left_descent(i)) --i;
    if (i < 0) fail(ErrorKind::Internal, "nonidentity element without a left descent");
    word.push_back(i);
    cur = simple_reflection(*datum_, i) * cur;
  }
  return word;
}

int FiniteWeylElt::order() const {
  IntMatrix p = m_;
  int k = 1;
  while (!p.is_identity()) {
    p = p * m_;
    if (++k > 1'000'000) fail(ErrorKind::Internal, "element order exceeds bound");
  }
  return k;
}

FiniteWeylElt FiniteWeylElt::inverse() const { return FiniteWeylElt(datum_, inv_, m_); }

FiniteWeylElt operator*(const FiniteWeylElt& a, const FiniteWeylElt& b) {
  check_same_datum(a, b);
  return FiniteWeylElt(a.datum_, a.m_ * b.m_, b.inv_ * a.inv_);
}

FiniteWeylElt compose(const FiniteWeylElt& a, const FiniteWeylElt& b) { return a * b; }
FiniteWeylElt inverse(const FiniteWeylElt& a) { return a.inverse(); }

std::vector<FiniteWeylElt> enumerate_w0(const RootDatum& d, std::size_t cap) {
  std::vector<FiniteWeylElt> gens;
  for (int i = 0; i < d.semisimple_rank(); ++i) gens.push_back(FiniteWeylElt::simple_reflection(d, i));
  std::unordered_set<FiniteWeylElt, FiniteWeylHash> seen;
  std::vector<FiniteWeylElt> out;
  std::deque<FiniteWeylElt> queue;
  auto id = FiniteWeylElt::identity(d);
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    auto w = queue.front();
    queue.pop_front();
    out.push_back(w);
    for (const auto& s : gens) {
      auto ws = w * s;
      if (seen.insert(ws).second) {
        if (seen.size() > cap) fail(ErrorKind::GroupTooLarge, "W0 exceeds the enumeration cap");
        queue.push_back(ws);
      }
    }
  }
  std::vector<std::pair<int, FiniteWeylElt>> keyed;
  for (auto& w : out) keyed.emplace_back(w.length(), w);
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  });
  out.clear();
  for (auto& [_, w] : keyed) out.push_back(w);
  return out;
}

FiniteWeylElt longest_element(const RootDatum& d) {
  // Multiply by simple reflections while the length grows.
  FiniteWeylElt w = FiniteWeylElt::identity(d);
  bool grew = true;
  while (grew) {
    grew = false;
    for (int i = 0; i < d.semisimple_rank(); ++i)
      if (!w.has_right_descent(i)) {
        w = w * FiniteWeylElt::simple_reflection(d, i);
        grew = true;
      }
  }
  return w;
}

FiniteTwist FiniteTwist::identity(const RootDatum& d) {
  FiniteTwist t;
  t.datum_ = &d;
  for (int i = 0; i < d.semisimple_rank(); ++i) t.perm_.push_back(i);
  t.lattice_ = IntMatrix::identity(d.rank());
  t.lattice_inv_ = t.lattice_;
  return t;
}

FiniteTwist FiniteTwist::from_datum(const RootDatum& d) {
  if (!d.delta()) fail(ErrorKind::InvalidArgument, "root datum '" + d.name() + "' carries no diagram automorphism");
  FiniteTwist t;
  t.datum_ = &d;
  t.perm_ = d.delta()->perm;
  t.lattice_ = d.delta()->lattice;
  t.lattice_inv_ = unimodular_inverse(t.lattice_);
  return t;
}

bool FiniteTwist::is_identity() const {
  for (std::size_t i = 0; i < perm_.size(); ++i)
    if (perm_[i] != static_cast<int>(i)) return false;
  return true;
}

FiniteWeylElt FiniteTwist::apply(const FiniteWeylElt& w) const {
  if (is_identity()) return w;
  // delta(w) is determined by delta(s_i) = s_{perm(i)} on a reduced word.
  std::vector<int> word = w.reduced_word();
  for (auto& i : word) i = map(i);
  return FiniteWeylElt::from_word(*datum_, word);
}

TwistedReduction delta_reduce_to_min(const FiniteWeylElt& w, const FiniteTwist& delta) {
  const RootDatum& d = w.datum();
  const int n = d.semisimple_rank();
  std::vector<FiniteWeylElt> s, ds;
  for (int i = 0; i < n; ++i) {
    s.push_back(FiniteWeylElt::simple_reflection(d, i));
    ds.push_back(FiniteWeylElt::simple_reflection(d, delta.map(i)));
  }

  TwistedReduction result;
  FiniteWeylElt cur = w;
  while (true) {
    const int len = cur.length();
    std::map<FiniteWeylElt, std::pair<FiniteWeylElt, int>> parent;
    std::set<FiniteWeylElt> frontier{cur};
    std::set<FiniteWeylElt> seen{cur};
    bool descended = false;
    while (!frontier.empty() && !descended) {
      FiniteWeylElt y = *frontier.begin();
      frontier.erase(frontier.begin());
      for (int i = 0; i < n; ++i) {
        FiniteWeylElt z = s[static_cast<std::size_t>(i)] * y * ds[static_cast<std::size_t>(i)];
        int lz = z.length();
        if (lz < len) {
          std::vector<TwistedStep> back;
          for (FiniteWeylElt node = y; node != cur;) {
            const auto& [p, si] = parent.at(node);
            back.push_back({si, p, node});
            node = p;
          }
          result.path.insert(result.path.end(), back.rbegin(), back.rend());
          result.path.push_back({i, y, z});
          cur = z;
          descended = true;
          break;
        }
        if (lz == len && seen.insert(z).second) {
          parent.emplace(z, std::make_pair(y, i));
          frontier.insert(z);
        }
      }
    }
    if (!descended) break;
  }
  result.w_min = cur;
  return result;
}

std::vector<int> support(const FiniteWeylElt& w) {
  auto word = w.reduced_word();
  std::set<int> supp(word.begin(), word.end());
  auto other = w.reduced_word_last();
  if (std::set<int>(other.begin(), other.end()) != supp)
    fail(ErrorKind::Internal, "support depends on the reduced word");
  return {supp.begin(), supp.end()};
}

std::vector<int> supp_delta(const FiniteWeylElt& w, const FiniteTwist& delta) {
  std::set<int> closed;
  for (int i : support(w)) {
    int j = i;
    while (closed.insert(j).second) j = delta.map(j);
  }
  return {closed.begin(), closed.end()};
}

bool is_elliptic_delta(const FiniteWeylElt& w, const FiniteTwist& delta) {
  return static_cast<int>(supp_delta(w, delta).size()) == w.datum().semisimple_rank();
}

}  // namespace weylcalc
