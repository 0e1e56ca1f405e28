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

#include "weylcalc/affweyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "weylcalc/errors.hpp"

namespace weylcalc {

AffineWeylElt::AffineWeylElt(IntVector lambda, FiniteWeylElt u) : lambda_(std::move(lambda)), u_(std::move(u)) {
  if (static_cast<int>(lambda_.size()) != u_.datum().rank()) {
    fail(ErrorKind::InvalidArgument, "translation part has the wrong rank");
  }
}

AffineWeylElt AffineWeylElt::identity(const RootDatum& d) {
  return AffineWeylElt(IntVector(static_cast<std::size_t>(d.rank()), 0), FiniteWeylElt::identity(d));
}

AffineWeylElt AffineWeylElt::translation(const RootDatum& d, IntVector lambda) {
  return AffineWeylElt(std::move(lambda), FiniteWeylElt::identity(d));
}

AffineWeylElt AffineWeylElt::finite(const FiniteWeylElt& u) {
  return AffineWeylElt(IntVector(static_cast<std::size_t>(u.datum().rank()), 0), u);
}

bool AffineWeylElt::is_identity() const {
  return u_.is_identity() && std::all_of(lambda_.begin(), lambda_.end(), [](std::int64_t c) { return c == 0; });
}

AffineWeylElt AffineWeylElt::inverse() const {
  FiniteWeylElt ui = u_.inverse();
  return AffineWeylElt(negated(ui.apply(lambda_)), ui);
}

AffineWeylElt operator*(const AffineWeylElt& a, const AffineWeylElt& b) {
  FiniteWeylElt uv = a.u_ * b.u_;  // checks the datum
  return AffineWeylElt(a.lambda_ + a.u_.apply(b.lambda_), std::move(uv));
}

std::strong_ordering operator<=>(const AffineWeylElt& a, const AffineWeylElt& b) {
  if (auto c = a.lambda_ <=> b.lambda_; c != 0) return c;
  return a.u_.matrix() <=> b.u_.matrix();
}

std::size_t AffineWeylElt::hash() const noexcept {
  std::size_t h = VectorHash{}(lambda_);
  hash_combine(h, u_.hash());
  return h;
}

AffineWeylElt aw_mul(const AffineWeylElt& a, const AffineWeylElt& b) { return a * b; }
AffineWeylElt aw_inv(const AffineWeylElt& a) { return a.inverse(); }

int length(const AffineWeylElt& w) {
  const RootDatum& d = w.datum();
  IntVector v = w.finite_part().apply(d.two_rho_check());
  std::int64_t total = 0;
  for (const IntVector& a : d.positive_roots()) {
    std::int64_t p = dot(a, w.lambda());
    total = checked::add(total, dot(a, v) > 0 ? std::llabs(p) : std::llabs(checked::sub(p, 1)));
  }
  return static_cast<int>(total);
}

NewtonPoint newton_point(const AffineWeylElt& w) {
  const RootDatum& d = w.datum();
  const FiniteWeylElt& u = w.finite_part();
  int n = u.order();
  IntVector sum(static_cast<std::size_t>(d.rank()), 0);
  IntVector term = w.lambda();
  for (int i = 0; i < n; ++i) {
    sum = sum + term;
    term = u.apply(term);
  }
  RatVector nu = scaled(to_rational(sum), Rational(1, n));
  RatVector nu_bar = d.dominant_rep(nu);
  return {std::move(nu), std::move(nu_bar)};
}

bool is_straight(const AffineWeylElt& w) {
  NewtonPoint np = newton_point(w);
  return Rational(length(w)) == dot(w.datum().two_rho(), np.nu_bar);
}

int defect(const AffineWeylElt& w) {
  const RootDatum& d = w.datum();
  int r = d.rank();
  std::vector<RatVector> a = to_rational_rows(w.finite_part().matrix());
  for (int i = 0; i < r; ++i) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] -= 1;
  // u(v) + lambda = v + nu is always solvable since lambda - nu averages to zero
  // over the cyclic group generated by u.
  RatVector rhs = newton_point(w).nu - to_rational(w.lambda());
  if (!solve(a, rhs)) fail(ErrorKind::Internal, "defect system has no solution");
  return rank(std::move(a));
}

KappaClass kappa(const AffineWeylElt& w) { return w.datum().kappa_class(w.lambda()); }

EtaDecomposition eta_decomposition(const AffineWeylElt& w) {
  const RootDatum& d = w.datum();
  int n = d.semisimple_rank();
  AffineWeylElt m = w;
  int len = length(m);
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 0; i < n; ++i) {
      AffineWeylElt next = AffineWeylElt::finite(FiniteWeylElt::simple_reflection(d, i)) * m;
      int l = length(next);
      if (l < len) {
        m = std::move(next);
        len = l;
        moved = true;
        break;
      }
    }
  }
  const IntVector& mu = m.lambda();
  if (!d.is_dominant(to_rational(mu))) fail(ErrorKind::DecompositionFailure, "coset-minimal element has non-dominant translation");
  AffineWeylElt xa = w * m.inverse();
  if (std::any_of(xa.lambda().begin(), xa.lambda().end(), [](std::int64_t c) { return c != 0; })) {
    fail(ErrorKind::DecompositionFailure, "w m^-1 is not in W0");
  }
  EtaDecomposition out{xa.finite_part(), mu, m.finite_part(), FiniteWeylElt{}};
  out.eta = out.y * out.x;
  return out;
}

// --- AffineWeylGroup ---

AffineWeylGroup::AffineWeylGroup(RootDatumPtr datum) : datum_(std::move(datum)) {
  const RootDatum& d = *datum_;
  int n = d.semisimple_rank();
  for (int i = 0; i < n; ++i) {
    gens_.push_back({i + 1, "s" + std::to_string(i + 1), AffineWeylElt::finite(FiniteWeylElt::simple_reflection(d, i)), i, -1});
  }
  for (int c = 0; c < static_cast<int>(d.components().size()); ++c) {
    int k = d.highest_root(c);
    AffineWeylElt s0(d.positive_coroots()[static_cast<std::size_t>(k)], FiniteWeylElt::reflection(d, k));
    std::string name = d.components().size() == 1 ? "s0" : "s0_" + std::to_string(c + 1);
    gens_.push_back({-c, name, std::move(s0), -1, c});
  }
  for (const Generator& g : gens_) {
    if (length(g.element) != 1) fail(ErrorKind::Internal, "generator " + g.name + " does not have length one");
  }

  // Coxeter diagram components: two nodes are joined when they do not commute.
  int m = num_generators();
  std::vector<int> comp(static_cast<std::size_t>(m), -1);
  for (int g = 0; g < m; ++g) {
    if (comp[static_cast<std::size_t>(g)] >= 0) continue;
    int id = static_cast<int>(diagram_components_.size());
    diagram_components_.emplace_back();
    std::vector<int> stack{g};
    comp[static_cast<std::size_t>(g)] = id;
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      diagram_components_.back().push_back(a);
      for (int b = 0; b < m; ++b) {
        if (comp[static_cast<std::size_t>(b)] < 0 && !generators_commute(a, b)) {
          comp[static_cast<std::size_t>(b)] = id;
          stack.push_back(b);
        }
      }
    }
    std::sort(diagram_components_.back().begin(), diagram_components_.back().end());
  }

  RatVector rc = d.rho_check();
  alcove_point_ = scaled(rc, Rational(-1, d.max_height() + 1));

  if (d.pi1_finite()) {
    for (const IntVector& lam : d.pi1_representatives()) omega_.push_back(omega_element(d.kappa_class(lam)));
    std::vector<KappaClass> seen;
    for (const AffineWeylElt& t : omega_) seen.push_back(kappa(t));
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end() ||
        static_cast<std::int64_t>(seen.size()) != d.pi1_order()) {
      fail(ErrorKind::Internal, "length-zero elements are not in bijection with X/Q^vee");
    }
  }
}

int AffineWeylGroup::generator_position(int label) const {
  for (int g = 0; g < num_generators(); ++g) {
    if (gens_[static_cast<std::size_t>(g)].label == label) return g;
  }
  fail(ErrorKind::InvalidArgument, "no generator with label " + std::to_string(label));
}

AffineWeylElt AffineWeylGroup::from_generator_word(const std::vector<int>& positions) const {
  AffineWeylElt w = AffineWeylElt::identity(*datum_);
  for (int g : positions) {
    if (g < 0 || g >= num_generators()) fail(ErrorKind::InvalidArgument, "generator position out of range");
    w = w * generator(g);
  }
  return w;
}

bool AffineWeylGroup::generators_commute(int g, int h) const {
  return generator(g) * generator(h) == generator(h) * generator(g);
}

const std::vector<AffineWeylElt>& AffineWeylGroup::omega_elements() const {
  if (!datum_->pi1_finite()) fail(ErrorKind::InfinitePi1, "X/Q^vee is infinite; length-zero elements are not enumerable");
  return omega_;
}

AffineWeylElt AffineWeylGroup::omega_element(const KappaClass& k) const {
  // Right multiplication by generators stays in the W_af-coset and lowers
  // length until the coset's unique length-zero element is reached.
  AffineWeylElt w = AffineWeylElt::translation(*datum_, datum_->kappa_representative(k));
  int len = length(w);
  while (len > 0) {
    bool moved = false;
    for (int g = 0; g < num_generators(); ++g) {
      AffineWeylElt next = w * generator(g);
      int l = length(next);
      if (l < len) {
        w = std::move(next);
        len = l;
        moved = true;
        break;
      }
    }
    if (!moved) fail(ErrorKind::Internal, "descent to a length-zero element got stuck");
  }
  return w;
}

bool AffineWeylGroup::is_positive(const AffineRoot& a) const {
  Rational value = dot(a.alpha, alcove_point_) + Rational(a.k);
  if (value.is_zero()) fail(ErrorKind::Internal, "alcove sample point lies on a wall");
  return value.sign() > 0;
}

AffineRoot AffineWeylGroup::act(const AffineWeylElt& w, const AffineRoot& a) const {
  IntVector ua = w.finite_part().act_on_root(a.alpha);
  std::int64_t k = checked::add(a.k, dot(ua, w.lambda()));
  return {std::move(ua), k};
}

int AffineWeylGroup::inversion_count(const AffineWeylElt& w) const {
  AffineWeylElt wi = w.inverse();
  int count = 0;
  for (const IntVector& pos : datum_->positive_roots()) {
    for (const IntVector& beta : {pos, negated(pos)}) {
      // w^-1 (beta, k) = (u^-1 beta, k - <beta, lambda>): only k near
      // <beta, lambda> can change sign.
      std::int64_t p = dot(beta, w.lambda());
      std::int64_t bound = std::llabs(p) + 2;
      for (std::int64_t k = -bound; k <= bound; ++k) {
        AffineRoot a{beta, k};
        if (is_positive(a) && !is_positive(act(wi, a))) ++count;
      }
    }
  }
  return count;
}

}  // namespace weylcalc
