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

#include <filesystem>
#include <functional>
#include <fstream>

#include "support.hpp"
#include "weylcalc/dims.hpp"
#include "weylcalc/errors.hpp"

using namespace weylcalc;
using wt::rv;

namespace {

struct Fixture {
  std::shared_ptr<const ClassEngine> classes;
  DimEngine dims;

  explicit Fixture(const char* name, std::optional<std::filesystem::path> dir = std::nullopt)
      : classes(std::make_shared<const ClassEngine>(wt::group(name))), dims(classes, std::move(dir)) {}

  const AffineWeylGroup& g() const { return classes->group(); }
  const RootDatum& d() const { return classes->datum(); }
  StraightClass cls(IntVector kappa_of, RatVector nu) const { return classes->find_class(d().kappa_class(kappa_of), nu); }
};

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

}  // namespace

TEST_CASE("DimValue arithmetic") {
  auto e = DimValue::empty();
  CHECK(e.plus(1) == e);
  CHECK(max(e, DimValue::finite(3)) == DimValue::finite(3));
  CHECK(max(DimValue::finite(2), e) == DimValue::finite(2));
  CHECK(DimValue::finite(4).plus(1) == DimValue::finite(5));
  CHECK_FALSE(e == DimValue::finite(0));
  CHECK(e.to_string() == "empty");
}

TEST_CASE("virtual dimension examples") {
  Fixture f("SL2");
  auto basic = f.cls({0}, rv({Rational(0)}));
  CHECK(virtual_dimension(wt::gen_word(f.g(), {0, 1, 0}), basic) == 2);
  CHECK(virtual_dimension(AffineWeylElt::identity(f.d()), basic) == 0);
  auto c = f.cls({0}, rv({Rational(1)}));
  auto t = AffineWeylElt::translation(f.d(), {-1});
  CHECK(eta_decomposition(t).eta.is_identity());
  CHECK(virtual_dimension(t, c) == 0);
  CHECK(f.dims.dim_X_flag(t, c) == DimValue::finite(0));
  auto vd = virtual_dimension_exact(wt::gen_word(f.g(), {0, 1, 0}), basic);
  CHECK(vd.by_class == vd.by_newton);
}

TEST_CASE("flag dimension examples") {
  Fixture f("SL2");
  auto basic = f.cls({0}, rv({Rational(0)}));
  CHECK(f.dims.dim_X_flag(wt::gen_word(f.g(), {1}), basic) == DimValue::finite(1));
  CHECK(f.dims.dim_X_flag(wt::gen_word(f.g(), {1, 0}), basic) == DimValue::empty());
  CHECK(f.dims.dim_X_flag(wt::gen_word(f.g(), {0, 1, 0}), basic) == DimValue::finite(2));
  auto step = f.dims.explain(wt::gen_word(f.g(), {0, 1, 0}));
  CHECK_FALSE(step.minimal);
  REQUIRE(step.descent);
  CHECK(f.g().generators()[static_cast<std::size_t>(step.descent->generator)].label == 0);
}

TEST_CASE("Grassmannian examples") {
  Fixture f("SL2");
  auto basic = f.cls({0}, rv({Rational(0)}));
  CHECK(f.dims.dim_X_grass({1}, basic) == DimValue::finite(1));
  CHECK(f.dims.dim_X_grass({1}, f.cls({0}, rv({Rational(1)}))) == DimValue::finite(0));
  CHECK(kind_of([&] { f.dims.dim_X_grass({-1}, basic); }) == ErrorKind::NotDominant);
  Fixture p("PGL2");
  CHECK(p.dims.dim_X_grass({2}, p.cls({1}, rv({Rational(0)}))) == DimValue::empty());
}

TEST_CASE("Springer dimension from invariants") {
  Fixture f("SL2");
  auto basic = f.cls({0}, rv({Rational(0)}));
  CHECK(springer_dim_from_invariants(f.d(), {basic, std::nullopt, 3, 3}) == 0);
  CHECK(springer_dim_from_invariants(f.d(), {f.cls({0}, rv({Rational(1)})), std::nullopt, 2, 2}) == 1);
  Fixture p("PGL2");
  auto c = p.cls({1}, rv({Rational(0)}));
  CHECK(springer_dim_from_invariants(p.d(), {c, std::nullopt, 2, 1}) == 1);
  CHECK(kind_of([&] { springer_dim_from_invariants(p.d(), {c, std::nullopt, 1, 1}); }) == ErrorKind::NonIntegralDimension);
  CHECK(kind_of([&] { springer_dim_from_invariants(f.d(), {basic, std::nullopt, 0, 4}); }) == ErrorKind::NegativeDimension);
  CHECK(kind_of([&] { resolve_springer_dim(f.d(), {basic, 5, 3, 3}); }) == ErrorKind::InvalidArgument);
  CHECK(resolve_springer_dim(f.d(), {basic, 0, 3, 3}) == 0);
}

TEST_CASE("affine Lusztig examples") {
  Fixture f("SL2");
  auto basic = f.cls({0}, rv({Rational(0)}));
  for (std::int64_t dd = 0; dd < 4; ++dd) {
    CHECK(f.dims.dim_Y_flag(wt::gen_word(f.g(), {1}), {basic, dd, {}, {}}) == DimValue::finite(1 + dd));
    CHECK(f.dims.dim_Y_flag(wt::gen_word(f.g(), {1, 0}), {basic, dd, {}, {}}) == DimValue::empty());
  }
  CHECK(f.dims.dim_Y_flag(wt::gen_word(f.g(), {0, 1, 0}), {basic, 0, {}, {}}) == DimValue::finite(2));
  CHECK(f.dims.dim_Y_grass({1}, {basic, 0, {}, {}}) == DimValue::finite(1));
  auto c = f.cls({0}, rv({Rational(1)}));
  CHECK(f.dims.dim_Y_grass({1}, {c, 2, {}, {}}) == DimValue::finite(2));
  Fixture p("PGL2");
  CHECK(p.dims.dim_Y_grass({2}, {p.cls({1}, rv({Rational(0)})), 0, {}, {}}) == DimValue::empty());
}

TEST_CASE("superregular examples") {
  Fixture f("SL2");
  auto basic = f.cls({0}, rv({Rational(0)}));
  auto s = wt::fw(f.d(), {1});
  auto e = FiniteWeylElt::identity(f.d());
  GammaDescriptor gd{basic, 0, {}, {}};
  auto r = f.dims.dim_Y_superregular(e, {4}, s, gd);
  AffineWeylElt w(IntVector{4}, s);
  CHECK(r == DimValue::finite(virtual_dimension(w, basic)));
  CHECK(f.dims.dim_Y_superregular(e, {4}, e, gd) == DimValue::empty());
  CHECK(kind_of([&] { f.dims.dim_Y_superregular(e, {0}, s, gd); }) == ErrorKind::HypothesisViolated);
  GammaDescriptor high{f.cls({0}, rv({Rational(1)})), 0, {}, {}};
  CHECK(kind_of([&] { f.dims.dim_Y_superregular(e, {1}, s, high); }) == ErrorKind::HypothesisViolated);
  CHECK(f.dims.dim_Y_superregular(e, {1}, s, gd) == DimValue::finite(1));
  Fixture p("PGL2");
  auto ps = wt::fw(p.d(), {1});
  auto pe = FiniteWeylElt::identity(p.d());
  CHECK(p.dims.dim_Y_superregular(pe, {5}, ps, {p.cls({0}, rv({Rational(0)})), 0, {}, {}}) == DimValue::empty());
}

TEST_CASE("dimension never exceeds the virtual dimension; base case identity") {
  for (const char* name : {"SL2", "PGL2", "SL3", "Sp4"}) {
    Fixture f(name);
    auto classes = f.classes->enumerate_straight_classes(6);
    for (const auto& w : f.classes->elements_up_to_length(6)) {
      bool minimal = f.classes->is_minimal(w);
      int nonempty = 0;
      for (const auto& c : classes) {
        DimValue v = f.dims.dim_X_flag(w, c);
        if (v.is_empty()) continue;
        ++nonempty;
        CHECK(Rational(v.value()) <= virtual_dimension_exact(w, c).by_class);
        if (minimal) CHECK(v.value() == length(w) - c.length);
      }
      if (minimal) CHECK(nonempty == 1);
      CHECK(f.dims.profile(w).count(f.classes->straight_class_of(w)) == 1);
    }
  }
}

TEST_CASE("recursion result does not depend on the chosen descent") {
  for (const char* name : {"SL2", "PGL2", "SL3", "PGL3", "Sp4"}) {
    Fixture f(name);
    for (const auto& w : f.classes->elements_up_to_length(6)) {
      CHECK(f.dims.profile(w, WitnessPolicy::First) == f.dims.profile(w, WitnessPolicy::Last));
    }
  }
}

TEST_CASE("Grassmannian formula matches the flag recursion") {
  for (const char* name : {"SL2", "PGL2", "SL3"}) {
    Fixture f(name);
    const RootDatum& d = f.d();
    auto w0 = enumerate_w0(d);
    int l_w0 = longest_element(d).length();
    auto classes = f.classes->enumerate_straight_classes(6);
    std::vector<IntVector> mus;
    for (const auto& t : f.classes->elements_up_to_length(8)) {
      if (t.finite_part().is_identity() && d.is_dominant(to_rational(t.lambda()))) mus.push_back(t.lambda());
    }
    for (const auto& mu : mus) {
      for (const auto& c : classes) {
        DimValue best = DimValue::empty();
        for (const auto& x : w0)
          for (const auto& y : w0) best = max(best, f.dims.dim_X_flag(AffineWeylElt::finite(x) * AffineWeylElt(mu, y), c));
        DimValue expect = best.is_empty() ? best : DimValue::finite(best.value() - l_w0);
        CHECK(f.dims.dim_X_grass(mu, c) == expect);
      }
    }
  }
}

TEST_CASE("cache round trip") {
  auto dir = std::filesystem::temp_directory_path() / "weylcalc-test-cache";
  std::filesystem::remove_all(dir);
  std::vector<std::pair<AffineWeylElt, DimProfile>> cold;
  {
    Fixture f("SL3", dir);
    for (const auto& w : f.classes->elements_up_to_length(5)) cold.emplace_back(w, f.dims.profile(w));
    f.dims.save_cache();
    CHECK(f.dims.cache_stats().loaded == 0);
  }
  {
    Fixture f("SL3", dir);
    CHECK(f.dims.cache_stats().loaded > 0);
    for (const auto& [w, p] : cold) {
      CHECK(f.dims.profile(w) == p);
      for (const auto& [c, v] : p) CHECK(f.dims.profile(w).find(c)->first.defect == c.defect);
    }
    CHECK(f.dims.cache_stats().computed == 0);
  }
  {
    // A cache for another datum is ignored.
    std::filesystem::copy_file(dir / ("weylcalc-" + RootDatum::preset("SL3")->fingerprint() + ".json"),
                               dir / ("weylcalc-" + RootDatum::preset("PGL3")->fingerprint() + ".json"));
    Fixture f("PGL3", dir);
    CHECK(f.dims.cache_stats().loaded == 0);
  }
  {
    std::ofstream(dir / ("weylcalc-" + RootDatum::preset("Sp4")->fingerprint() + ".json")) << "{not json";
    Fixture f("Sp4", dir);
    CHECK(f.dims.cache_stats().loaded == 0);
  }
  std::filesystem::remove_all(dir);
}
