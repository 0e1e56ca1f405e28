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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "support.hpp"
#include "weylcalc/errors.hpp"
#include "weylcalc/oracle.hpp"

using namespace weylcalc;
using wt::rv;

TEST_CASE("group law examples") {
  auto g = wt::group("SL2");
  const RootDatum& d = g->datum();
  auto t = AffineWeylElt::translation(d, {1});
  CHECK(t * t == AffineWeylElt::translation(d, {2}));
  auto w = wt::elt(d, {1}, {1});
  CHECK(w.inverse() == w);
  CHECK((w * w).is_identity());
}

TEST_CASE("group law properties") {
  for (const char* name : {"SL2", "PGL2", "SL3", "PGL3", "Sp4", "GL2"}) {
    auto g = wt::group(name);
    for (int trial = 0; trial < 300; ++trial) {
      auto a = wt::random_element(*g, 8), b = wt::random_element(*g, 8), c = wt::random_element(*g, 8);
      CHECK((a * b) * c == a * (b * c));
      CHECK((a * a.inverse()).is_identity());
      CHECK(length(a) == length(a.inverse()));
      CHECK(kappa(a * b) == g->datum().kappa_add(kappa(a), kappa(b)));
      NewtonPoint na = newton_point(a);
      CHECK(newton_point(a.inverse()).nu == scaled(na.nu, Rational(-1)));
      CHECK(newton_point(b * a * b.inverse()).nu_bar == na.nu_bar);
      for (const auto& s : g->generators()) CHECK(kappa(s.element * a) == kappa(a));
    }
  }
}

TEST_CASE("length examples") {
  auto sl2 = wt::group("SL2");
  CHECK(length(AffineWeylElt::identity(sl2->datum())) == 0);
  CHECK(length(AffineWeylElt::translation(sl2->datum(), {1})) == 2);
  auto pgl2 = wt::group("PGL2");
  CHECK(length(wt::elt(pgl2->datum(), {1}, {1})) == 0);
}

TEST_CASE("generators") {
  auto sl2 = wt::group("SL2");
  REQUIRE(sl2->num_generators() == 2);
  CHECK(sl2->generator(1) == wt::elt(sl2->datum(), {1}, {1}));
  CHECK(wt::group("SL3")->num_generators() == 3);
  CHECK(wt::group("Sp4")->num_generators() == 3);
  CHECK(wt::group("GL2")->num_generators() == 2);
  for (const auto& name : RootDatum::preset_names()) {
    auto g = wt::group(name);
    for (const auto& s : g->generators()) {
      CHECK(length(s.element) == 1);
      CHECK((s.element * s.element).is_identity());
    }
  }
}

TEST_CASE("Newton points") {
  auto g = wt::group("SL2");
  const RootDatum& d = g->datum();
  CHECK(newton_point(wt::elt(d, {1}, {1})).nu == rv({Rational(0)}));
  auto np = newton_point(AffineWeylElt::translation(d, {1}));
  CHECK(np.nu == rv({Rational(1)}));
  CHECK(np.nu_bar == rv({Rational(1)}));
  auto s1s0 = wt::gen_word(*g, {1, 0});
  CHECK(s1s0 == AffineWeylElt::translation(d, {-1}));
  np = newton_point(s1s0);
  CHECK(np.nu == rv({Rational(-1)}));
  CHECK(np.nu_bar == rv({Rational(1)}));
}

TEST_CASE("straightness") {
  auto g = wt::group("SL2");
  const RootDatum& d = g->datum();
  CHECK(is_straight(AffineWeylElt::identity(d)));
  CHECK_FALSE(is_straight(wt::elt(d, {0}, {1})));
  auto t = AffineWeylElt::translation(d, {-1});
  CHECK(is_straight(t));
  CHECK(brute_straight_check(t, 12));
  CHECK_FALSE(brute_straight_check(wt::elt(d, {0}, {1}), 2));
  auto pgl3 = wt::group("PGL3");
  for (const auto& tau : pgl3->omega_elements()) CHECK(brute_straight_check(tau, 7));
}

TEST_CASE("defect") {
  auto sl2 = wt::group("SL2");
  CHECK(defect(AffineWeylElt::identity(sl2->datum())) == 0);
  CHECK(defect(AffineWeylElt::translation(sl2->datum(), {1})) == 0);
  auto pgl2 = wt::group("PGL2");
  CHECK(defect(wt::elt(pgl2->datum(), {1}, {1})) == 1);
}

TEST_CASE("kappa of elements") {
  auto pgl2 = wt::group("PGL2");
  const RootDatum& d = pgl2->datum();
  CHECK(kappa(wt::elt(d, {1}, {1})) == d.kappa_class({1}));
  CHECK(kappa(wt::elt(d, {1}, {1})) != d.kappa_class({0}));
  for (const auto& s : pgl2->generators()) CHECK(kappa(s.element) == d.kappa_class({0}));
}

TEST_CASE("eta decomposition examples") {
  auto g = wt::group("SL2");
  const RootDatum& d = g->datum();
  auto s = wt::fw(d, {1});
  auto e = FiniteWeylElt::identity(d);

  auto w = wt::elt(d, {2}, {1});
  CHECK(w == wt::gen_word(*g, {0, 1, 0}));
  CHECK(length(w) == 3);
  auto r = eta_decomposition(w);
  CHECK(r.x == e);
  CHECK(r.mu == IntVector{2});
  CHECK(r.y == s);
  CHECK(r.eta == s);

  auto sl3 = wt::group("SL3");
  r = eta_decomposition(AffineWeylElt::translation(sl3->datum(), {2, 3}));
  CHECK(r.x.is_identity());
  CHECK(r.y.is_identity());
  CHECK(r.eta.is_identity());

  r = eta_decomposition(AffineWeylElt::finite(s));
  CHECK(r.x == s);
  CHECK(r.mu == IntVector{0});
  CHECK(r.y == e);
  CHECK(r.eta == s);
}

TEST_CASE("eta decomposition reconstructs w and is coset-minimal") {
  for (const char* name : {"SL2", "PGL2", "SL3", "PGL3", "Sp4", "GL2"}) {
    auto g = wt::group(name);
    const RootDatum& d = g->datum();
    auto w0 = enumerate_w0(d);
    for (int trial = 0; trial < 200; ++trial) {
      auto w = wt::random_element(*g, 10);
      auto r = eta_decomposition(w);
      AffineWeylElt m(r.mu, r.y);
      CHECK(AffineWeylElt::finite(r.x) * m == w);
      CHECK(d.is_dominant(to_rational(r.mu)));
      for (const auto& v : w0) CHECK(length(AffineWeylElt::finite(v) * m) >= length(m));
    }
  }
}

TEST_CASE("length-zero elements") {
  auto sl2 = wt::group("SL2");
  REQUIRE(sl2->omega_elements().size() == 1);
  CHECK(sl2->omega_elements()[0].is_identity());

  auto pgl2 = wt::group("PGL2");
  std::set<AffineWeylElt> om(pgl2->omega_elements().begin(), pgl2->omega_elements().end());
  CHECK(om == std::set<AffineWeylElt>{AffineWeylElt::identity(pgl2->datum()), wt::elt(pgl2->datum(), {1}, {1})});

  auto pgl3 = wt::group("PGL3");
  const auto& o3 = pgl3->omega_elements();
  REQUIRE(o3.size() == 3);
  std::set<AffineWeylElt> s3(o3.begin(), o3.end());
  for (const auto& a : o3) {
    CHECK(length(a) == 0);
    CHECK(normalizes_generators(*pgl3, a));
    for (const auto& b : o3) CHECK(s3.count(a * b) == 1);
  }

  auto gl2 = wt::group("GL2");
  CHECK_THROWS_AS(gl2->omega_elements(), Error);
  auto tau = gl2->omega_element(gl2->datum().kappa_class({1, 0}));
  CHECK(length(tau) == 0);
  CHECK(normalizes_generators(*gl2, tau));
}

TEST_CASE("length invariants under length-zero multiplication") {
  for (const char* name : {"PGL2", "PGL3"}) {
    auto g = wt::group(name);
    for (int trial = 0; trial < 200; ++trial) {
      auto w = wt::random_element(*g, 8);
      for (const auto& t : g->omega_elements())
        for (const auto& t2 : g->omega_elements()) CHECK(length(t * w * t2) == length(w));
    }
  }
}

TEST_CASE("affine root positivity is constant on the alcove interior") {
  for (const char* name : {"SL2", "SL3", "Sp4", "PGL3"}) {
    auto g = wt::group(name);
    const RootDatum& d = g->datum();
    // a second interior point: move towards the barycenter along rho^vee
    RatVector p1 = g->alcove_point();
    RatVector p2 = scaled(d.rho_check(), Rational(-1, 2 * (d.max_height() + 1)));
    for (const auto& a : d.positive_roots()) {
      for (const IntVector& beta : {a, negated(a)}) {
        for (std::int64_t k = -4; k <= 4; ++k) {
          Rational v1 = dot(beta, p1) + Rational(k), v2 = dot(beta, p2) + Rational(k);
          CHECK(v1.sign() == v2.sign());
          CHECK(g->is_positive({beta, k}) == (v1.sign() > 0));
        }
      }
    }
  }
}

TEST_CASE("length equals affine inversion count") {
  for (const char* name : {"SL2", "PGL2", "SL3", "PGL3", "Sp4", "GL2"}) {
    auto g = wt::group(name);
    for (int trial = 0; trial < 200; ++trial) {
      auto w = wt::random_element(*g, 10);
      CHECK(length(w) == g->inversion_count(w));
    }
  }
}

TEST_CASE("formula length equals Cayley distance on small balls") {
  for (const char* name : {"SL2", "PGL2", "SL3", "Sp4"}) {
    auto g = wt::group(name);
    Ball b = cayley_ball(*g, 5);
    for (const auto& [w, dist] : b.distance) CHECK(length(w) == dist);
  }
  auto sl2 = wt::group("SL2");
  CHECK(cayley_ball(*sl2, 3).distance.size() == 7);
  CHECK(cayley_ball(*sl2, 0).distance.size() == 1);
}

TEST_CASE("diagram components") {
  CHECK(wt::group("SL3")->diagram_components().size() == 1);
  CHECK(wt::group("Sp4")->diagram_components().size() == 1);
  CHECK(wt::group("SL2")->diagram_components().size() == 1);
}
