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

#include "weylcalc/classes.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <set>

#include "weylcalc/errors.hpp"

namespace weylcalc {

std::strong_ordering operator<=>(const StraightClass& a, const StraightClass& b) {
  if (auto c = a.length <=> b.length; c != 0) return c;
  if (auto c = a.nu_bar <=> b.nu_bar; c != 0) return c;
  return a.kappa <=> b.kappa;
}

std::string to_string(const StraightClass& c) {
  return "(kappa=" + to_string(c.kappa) + ", nu=" + to_string(c.nu_bar) + ", length=" + std::to_string(c.length) +
         ", defect=" + std::to_string(c.defect) + ")";
}

std::size_t StraightClassHash::operator()(const StraightClass& c) const noexcept {
  std::size_t h = KappaHash{}(c.kappa);
  for (const Rational& r : c.nu_bar) {
    hash_combine(h, std::hash<std::int64_t>{}(r.num()));
    hash_combine(h, std::hash<std::int64_t>{}(r.den()));
  }
  return h;
}

ClassEngine::ClassEngine(std::shared_ptr<const AffineWeylGroup> group, std::size_t budget)
    : group_(std::move(group)), budget_(budget) {
  int m = group_->num_generators();
  for (int mask = 0; mask < (1 << m); ++mask) {
    std::vector<int> K;
    for (int g = 0; g < m; ++g)
      if (mask & (1 << g)) K.push_back(g);
    if (is_spherical(K)) spherical_.push_back(std::move(K));
  }
  std::sort(spherical_.begin(), spherical_.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
}

AffineWeylElt ClassEngine::conj(int s, const AffineWeylElt& w) const {
  const AffineWeylElt& g = group_->generator(s);
  return g * w * g;
}

std::vector<AffineWeylElt> ClassEngine::approx_closure(const AffineWeylElt& w) const {
  int len = length(w);
  std::set<AffineWeylElt> seen{w};
  std::deque<AffineWeylElt> queue{w};
  while (!queue.empty()) {
    AffineWeylElt y = std::move(queue.front());
    queue.pop_front();
    for (int s = 0; s < group_->num_generators(); ++s) {
      AffineWeylElt z = conj(s, y);
      if (length(z) == len && seen.insert(z).second) {
        if (seen.size() > budget_) fail(ErrorKind::ExplorationBudgetExceeded, "approx-class exceeds the node budget");
        queue.push_back(std::move(z));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

std::optional<Descent> ClassEngine::find_descent(const AffineWeylElt& w, WitnessPolicy policy) const {
  if (policy == WitnessPolicy::First) {
    std::shared_lock lock(mu_);
    if (minimal_memo_.count(w)) return std::nullopt;
  }
  int len = length(w);
  // parent[y] = (previous element, generator); BFS in generator order.
  std::unordered_map<AffineWeylElt, std::pair<AffineWeylElt, int>, AffineWeylHash> parent;
  parent.emplace(w, std::make_pair(w, -1));
  std::deque<AffineWeylElt> queue{w};
  std::optional<std::pair<AffineWeylElt, int>> found;
  while (!queue.empty()) {
    AffineWeylElt y = std::move(queue.front());
    queue.pop_front();
    for (int s = 0; s < group_->num_generators(); ++s) {
      AffineWeylElt z = conj(s, y);
      int l = length(z);
      if (l < len) {
        found = std::make_pair(y, s);
        if (policy == WitnessPolicy::First) break;
      } else if (l == len && !parent.count(z)) {
        if (parent.size() >= budget_) fail(ErrorKind::ExplorationBudgetExceeded, "approx-class exceeds the node budget");
        parent.emplace(z, std::make_pair(y, s));
        queue.push_back(std::move(z));
      }
    }
    if (found && policy == WitnessPolicy::First) break;
  }
  if (!found) {
    std::unique_lock lock(mu_);
    for (const auto& entry : parent) minimal_memo_.insert(entry.first);
    return std::nullopt;
  }
  Descent d{{}, found->first, found->second};
  for (AffineWeylElt y = d.w_prime; !(y == w);) {
    const auto& [prev, s] = parent.at(y);
    d.walk.push_back({s, prev, y});
    y = prev;
  }
  std::reverse(d.walk.begin(), d.walk.end());
  return d;
}

Reduction ClassEngine::reduce_to_min(const AffineWeylElt& w) const {
  Reduction r{w, {}};
  while (auto d = find_descent(r.w_min)) {
    for (auto& step : d->walk) r.path.push_back(std::move(step));
    AffineWeylElt next = conj(d->generator, d->w_prime);
    r.path.push_back({d->generator, d->w_prime, next});
    r.w_min = std::move(next);
  }
  return r;
}

UxDecomposition ClassEngine::ux_decompose(const AffineWeylElt& w_min) const {
  for (const AffineWeylElt& w2 : approx_closure(w_min)) {
    for (const auto& K : spherical_) {
      // x = minimal element of W_K w2, by greedy left descent.
      AffineWeylElt x = w2;
      int lx = length(x);
      for (bool moved = true; moved;) {
        moved = false;
        for (int s : K) {
          AffineWeylElt y = group_->generator(s) * x;
          int ly = length(y);
          if (ly < lx) {
            x = std::move(y);
            lx = ly;
            moved = true;
            break;
          }
        }
      }
      if (!is_straight(x)) continue;
      bool ok = true;
      AffineWeylElt xi = x.inverse();
      for (int s : K) {
        if (length(x * group_->generator(s)) < lx) {
          ok = false;
          break;
        }
        AffineWeylElt c = x * group_->generator(s) * xi;
        if (std::none_of(K.begin(), K.end(), [&](int t) { return group_->generator(t) == c; })) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      AffineWeylElt u = w2 * xi;
      if (length(u) != length(w2) - lx) fail(ErrorKind::Internal, "u x decomposition is not length-additive");
      return {std::move(u), std::move(x), K, w2};
    }
  }
  fail(ErrorKind::DecompositionNotFound, "no u x decomposition in the approx-class");
}

StraightClass ClassEngine::class_of_straight(const AffineWeylElt& x) const {
  if (!is_straight(x)) fail(ErrorKind::InvalidArgument, "element is not straight");
  return {kappa(x), newton_point(x).nu_bar, length(x), defect(x)};
}

StraightClass ClassEngine::straight_class_of(const AffineWeylElt& w) const {
  {
    std::shared_lock lock(mu_);
    auto it = class_memo_.find(w);
    if (it != class_memo_.end()) return it->second;
  }
  AffineWeylElt w_min = reduce_to_min(w).w_min;
  UxDecomposition ux = ux_decompose(w_min);
  if (kappa(ux.x) != kappa(w_min)) fail(ErrorKind::Internal, "straight part changed kappa");
  StraightClass c = class_of_straight(ux.x);
  std::unique_lock lock(mu_);
  class_memo_.emplace(w, c);
  return c;
}

std::vector<AffineWeylElt> ClassEngine::elements_up_to_length(int max_len, const std::optional<KappaClass>& k) const {
  std::vector<AffineWeylElt> level;
  if (k) {
    level.push_back(group_->omega_element(*k));
  } else {
    level = group_->omega_elements();  // throws InfinitePi1
  }
  std::sort(level.begin(), level.end());
  std::vector<AffineWeylElt> out;
  for (int l = 0; l <= max_len && !level.empty(); ++l) {
    std::set<AffineWeylElt> next;
    for (const AffineWeylElt& w : level) {
      for (int s = 0; s < group_->num_generators(); ++s) {
        AffineWeylElt v = group_->generator(s) * w;
        if (length(v) == l + 1) next.insert(std::move(v));
      }
    }
    out.insert(out.end(), level.begin(), level.end());
    if (out.size() + next.size() > budget_) fail(ErrorKind::ExplorationBudgetExceeded, "length ball exceeds the node budget");
    level.assign(next.begin(), next.end());
  }
  return out;
}

std::vector<StraightClass> ClassEngine::enumerate_straight_classes(int max_len, const std::optional<KappaClass>& k) const {
  if (max_len < 0) fail(ErrorKind::InvalidArgument, "max_len must be nonnegative");
  std::map<StraightClass, std::vector<AffineWeylElt>> found;
  for (const AffineWeylElt& w : elements_up_to_length(max_len, k)) {
    if (!is_straight(w)) continue;
    StraightClass c = class_of_straight(w);
    auto [it, fresh] = found.try_emplace(c);
    if (!fresh && (it->first.defect != c.defect || it->first.length != c.length)) {
      fail(ErrorKind::Internal, "straight elements of one class disagree on length or defect");
    }
    it->second.push_back(w);
  }
  std::vector<StraightClass> out;
  for (const auto& [c, ws] : found) out.push_back(c);
  return out;
}

StraightClass ClassEngine::find_class(const KappaClass& k, const RatVector& nu_bar) const {
  const RootDatum& d = datum();
  if (static_cast<int>(nu_bar.size()) != d.rank()) fail(ErrorKind::InvalidArgument, "Newton point has the wrong rank");
  if (!d.is_dominant(nu_bar)) fail(ErrorKind::NotDominant, "Newton point of a class must be dominant");
  Rational len = dot(d.two_rho(), nu_bar);
  if (!len.is_integer()) fail(ErrorKind::InvalidArgument, "no straight class has this Newton point");
  int l = static_cast<int>(len.to_integer());
  for (const AffineWeylElt& w : elements_up_to_length(l, k)) {
    if (length(w) != l || !is_straight(w)) continue;
    if (newton_point(w).nu_bar == nu_bar) return class_of_straight(w);
  }
  fail(ErrorKind::InvalidArgument, "no straight class with kappa " + to_string(k) + " and Newton point " + to_string(nu_bar));
}

bool ClassEngine::is_spherical(const std::vector<int>& K) const {
  std::set<int> ks(K.begin(), K.end());
  for (const auto& comp : group_->diagram_components()) {
    if (std::all_of(comp.begin(), comp.end(), [&](int g) { return ks.count(g) > 0; })) return false;
  }
  return true;
}

bool ClassEngine::p_alcove_test(const AffineWeylElt& w, const RatVector& nu) const {
  const RootDatum& d = datum();
  // (i) the finite part lies in the reflection subgroup of the M-roots.
  std::vector<FiniteWeylElt> gens;
  for (int k = 0; k < d.num_positive_roots(); ++k) {
    if (dot(d.positive_roots()[static_cast<std::size_t>(k)], nu).is_zero()) gens.push_back(FiniteWeylElt::reflection(d, k));
  }
  std::set<FiniteWeylElt> wm{FiniteWeylElt::identity(d)};
  std::deque<FiniteWeylElt> queue{FiniteWeylElt::identity(d)};
  while (!queue.empty()) {
    FiniteWeylElt y = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      FiniteWeylElt z = y * g;
      if (wm.insert(z).second) queue.push_back(z);
    }
  }
  if (!wm.count(w.finite_part())) return false;

  // (ii) for N-roots a: w^-1 a positive implies a positive.
  std::int64_t window = 0;
  for (const IntVector& a : d.positive_roots()) window = std::max<std::int64_t>(window, std::llabs(dot(a, w.lambda())));
  window += 1;
  AffineWeylElt wi = w.inverse();
  for (const IntVector& pos : d.positive_roots()) {
    for (const IntVector& a : {pos, negated(pos)}) {
      if (dot(a, nu).sign() <= 0) continue;
      for (std::int64_t k = -window; k <= window; ++k) {
        AffineRoot r{a, k};
        if (group_->is_positive(group_->act(wi, r)) && !group_->is_positive(r)) return false;
      }
    }
  }
  return true;
}

}  // namespace weylcalc
