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

#include <algorithm>
#include <functional>
#include <set>

#include "support.hpp"
#include "weylcalc/errors.hpp"
#include "weylcalc/linalg.hpp"

using namespace weylcalc;
using wt::rv;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

// Membership in the coroot lattice by an independent integral solve.
bool in_coroot_lattice(const RootDatum& d, const IntVector& lambda) {
  auto c = solve(to_rational_rows(d.coroot_matrix()), to_rational(lambda));
  return c && std::all_of(c->begin(), c->end(), [](const Rational& x) { return x.is_integer(); });
}

}  // namespace

TEST_CASE("rank one presets") {
  auto sl2 = RootDatum::preset("SL2");
  CHECK(sl2->rank() == 1);
  CHECK(sl2->num_positive_roots() == 1);
  CHECK(dot(sl2->simple_root(0), sl2->simple_coroot(0)) == 2);
  CHECK(sl2->rho() == rv({Rational(1)}));  // rho = alpha / 2 and alpha = 2 on X = Z alpha^vee

  auto pgl2 = RootDatum::preset("PGL2");
  CHECK(pgl2->simple_coroot(0) == IntVector{2});
  CHECK(pgl2->simple_root(0) == IntVector{1});
}

TEST_CASE("positive root counts") {
  CHECK(RootDatum::preset("SL3")->num_positive_roots() == 3);
  CHECK(RootDatum::preset("PGL3")->num_positive_roots() == 3);
  CHECK(RootDatum::preset("Sp4")->num_positive_roots() == 4);
  CHECK(RootDatum::preset("SL4")->num_positive_roots() == 6);
  CHECK(RootDatum::preset("GL2")->num_positive_roots() == 1);
}

TEST_CASE("config errors") {
  using nlohmann::json;
  CHECK(kind_of([] { RootDatum::build(json{{"cartan", {{2, -2}, {-2, 2}}}}); }) == ErrorKind::NotFiniteType);
  CHECK(kind_of([] { RootDatum::build(json{{"cartan", {{2, -3}, {-3, 2}}}}); }) == ErrorKind::NotFiniteType);
  CHECK(kind_of([] { RootDatum::build(json{{"rank", 1}, {"roots", {{2}}}}); }) == ErrorKind::MalformedConfig);
  CHECK(kind_of([] { RootDatum::build(json{{"rank", "two"}}); }) == ErrorKind::MalformedConfig);
  CHECK(kind_of([] { RootDatum::preset("E9"); }) == ErrorKind::MalformedConfig);
  // delta that does not intertwine roots and coroots
  json bad = RootDatum::preset_config("Sp4");
  bad["delta"] = {{"perm", {2, 1}}, {"lattice_matrix", {{0, 1}, {1, 0}}}};
  CHECK(kind_of([&] { RootDatum::build(bad); }) == ErrorKind::BadAutomorphism);
  json bad_perm = RootDatum::preset_config("SL3");
  bad_perm["delta"] = {{"perm", {1, 1}}, {"lattice_matrix", {{1, 0}, {0, 1}}}};
  CHECK(kind_of([&] { RootDatum::build(bad_perm); }) == ErrorKind::BadAutomorphism);
}

TEST_CASE("cartan-only config") {
  auto d = RootDatum::build(nlohmann::json{{"cartan", {{2, -1}, {-2, 2}}}});
  CHECK(d->rank() == 2);
  CHECK(d->num_positive_roots() == 4);
  CHECK(d->pi1_order() == 1);
}

TEST_CASE("json round trip keeps the fingerprint") {
  for (const auto& name : RootDatum::preset_names()) {
    auto d = RootDatum::preset(name);
    auto e = RootDatum::build(d->to_json());
    CHECK(d->fingerprint() == e->fingerprint());
  }
  CHECK(RootDatum::preset("SL3")->fingerprint() != RootDatum::preset("PGL3")->fingerprint());
}

TEST_CASE("dominant representative") {
  auto sl2 = RootDatum::preset("SL2");
  CHECK(sl2->dominant_rep(rv({Rational(-1)})) == rv({Rational(1)}));
  CHECK(sl2->dominant_rep(rv({Rational(0)})) == rv({Rational(0)}));

  // SL3: compare with a scan over the whole W0-orbit.
  auto sl3 = RootDatum::preset("SL3");
  RatVector regular = sl3->reflect(0, rv({Rational(2), Rational(3)}));
  std::vector<RatVector> dominant;
  for (const auto& w : enumerate_w0(*sl3)) {
    RatVector v = w.apply(regular);
    if (sl3->is_dominant(v)) dominant.push_back(v);
  }
  REQUIRE(dominant.size() == 1);
  CHECK(sl3->dominant_rep(regular) == dominant[0]);
}

TEST_CASE("dominant representative is W0-invariant") {
  for (const char* name : {"SL3", "PGL3", "Sp4", "GL2", "SL4"}) {
    auto d = RootDatum::preset(name);
    std::uniform_int_distribution<int> c(-6, 6), den(1, 3);
    for (int trial = 0; trial < 200; ++trial) {
      RatVector v;
      for (int k = 0; k < d->rank(); ++k) v.push_back(Rational(c(wt::rng()), den(wt::rng())));
      RatVector rep = d->dominant_rep(v);
      CHECK(d->is_dominant(rep));
      for (int i = 0; i < d->semisimple_rank(); ++i) CHECK(d->dominant_rep(d->reflect(i, v)) == rep);
    }
  }
}

TEST_CASE("dominance order examples") {
  auto sl2 = RootDatum::preset("SL2");
  CHECK(sl2->dominance_leq(rv({Rational(0)}), rv({Rational(1)})));
  CHECK_FALSE(sl2->dominance_leq(rv({Rational(1)}), rv({Rational(0)})));
  CHECK(kind_of([&] { sl2->dominance_leq(rv({Rational(-1)}), rv({Rational(0)})); }) == ErrorKind::NotDominant);

  auto pgl2 = RootDatum::preset("PGL2");
  CHECK(pgl2->dominance_leq(rv({Rational(0)}), rv({Rational(1)})));  // varpi = alpha^vee / 2
  CHECK_FALSE(pgl2->dominance_leq(rv({Rational(1)}), rv({Rational(0)})));

  // GL2: the central direction must match exactly.
  auto gl2 = RootDatum::preset("GL2");
  CHECK(gl2->dominance_leq(rv({Rational(0), Rational(0)}), rv({Rational(1), Rational(-1)})));
  CHECK_FALSE(gl2->dominance_leq(rv({Rational(0), Rational(0)}), rv({Rational(1), Rational(0)})));
}

TEST_CASE("dominance is a partial order on a grid") {
  for (const char* name : {"SL3", "Sp4"}) {
    auto d = RootDatum::preset(name);
    std::vector<RatVector> grid;
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; b <= 3; ++b) grid.push_back(d->dominant_rep(rv({Rational(a, 2), Rational(b, 2)})));
    for (const auto& x : grid) {
      CHECK(d->dominance_leq(x, x));
      for (const auto& y : grid) {
        if (d->dominance_leq(x, y) && d->dominance_leq(y, x)) CHECK(x == y);
        for (const auto& z : grid) {
          if (d->dominance_leq(x, y) && d->dominance_leq(y, z)) CHECK(d->dominance_leq(x, z));
        }
      }
    }
  }
}

TEST_CASE("kappa examples") {
  auto sl2 = RootDatum::preset("SL2");
  CHECK(sl2->kappa_class({1}) == sl2->kappa_class({0}));
  CHECK(sl2->pi1_order() == 1);

  auto pgl2 = RootDatum::preset("PGL2");
  CHECK(pgl2->pi1_order() == 2);
  CHECK(pgl2->kappa_class({1}) != pgl2->kappa_class({0}));
  CHECK(pgl2->kappa_class({2}) == pgl2->kappa_class({0}));

  CHECK(RootDatum::preset("PGL3")->pi1_order() == 3);
  auto gl2 = RootDatum::preset("GL2");
  CHECK_FALSE(gl2->pi1_finite());
  CHECK(kind_of([&] { gl2->pi1_order(); }) == ErrorKind::InfinitePi1);
}

TEST_CASE("kappa is additive and vanishes exactly on the coroot lattice") {
  for (const char* name : {"SL2", "PGL2", "GL2", "SL3", "PGL3", "Sp4", "SL4"}) {
    auto d = RootDatum::preset(name);
    std::uniform_int_distribution<int> c(-5, 5);
    auto draw = [&] {
      IntVector v;
      for (int k = 0; k < d->rank(); ++k) v.push_back(c(wt::rng()));
      return v;
    };
    KappaClass zero = d->kappa_class(IntVector(static_cast<std::size_t>(d->rank()), 0));
    for (int trial = 0; trial < 200; ++trial) {
      IntVector a = draw(), b = draw();
      CHECK(d->kappa_class(a + b) == d->kappa_add(d->kappa_class(a), d->kappa_class(b)));
      CHECK((d->kappa_class(a) == zero) == in_coroot_lattice(*d, a));
      CHECK(d->kappa_class(d->kappa_representative(d->kappa_class(a))) == d->kappa_class(a));
    }
    if (d->pi1_finite()) {
      std::set<KappaClass> seen;
      for (const auto& lam : d->pi1_representatives()) seen.insert(d->kappa_class(lam));
      CHECK(static_cast<std::int64_t>(seen.size()) == d->pi1_order());
    }
  }
}

TEST_CASE("rho pairs to one with every simple coroot") {
  for (const auto& name : RootDatum::preset_names()) {
    auto d = RootDatum::preset(name);
    for (int i = 0; i < d->semisimple_rank(); ++i) {
      CHECK(dot(d->simple_coroot(i), d->rho()) == Rational(1));
      CHECK(dot(d->simple_root(i), d->rho_check()) == Rational(1));
    }
  }
}

TEST_CASE("delta permutes the positive roots and fixes the Cartan matrix") {
  for (const char* name : {"A2-twisted", "A3-twisted"}) {
    auto d = RootDatum::preset(name);
    REQUIRE(d->delta());
    const auto& delta = *d->delta();
    int n = d->semisimple_rank();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) CHECK(d->cartan()(delta.perm[i], delta.perm[j]) == d->cartan()(i, j));
    IntMatrix ginv = unimodular_inverse(delta.lattice);
    for (const auto& a : d->positive_roots()) {
      IntVector image = ginv.apply_left(a);  // a o g^{-1}
      CHECK(d->root_index(image).has_value());
      CHECK(d->is_positive_root(image));
    }
  }
}
