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

#include "weylcalc/dims.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <vector>

#include "weylcalc/errors.hpp"
#include "weylcalc/serialize.hpp"

namespace weylcalc {

namespace {

constexpr int kCacheVersion = 1;

std::int64_t integral(const Rational& r, ErrorKind kind, const std::string& what) {
  if (!r.is_integer()) fail(kind, what + " is not an integer: " + r.to_string());
  return r.num();
}

}  // namespace

DimValue DimValue::finite(std::int64_t n) {
  if (n < 0) fail(ErrorKind::NegativeDimension, "negative dimension " + std::to_string(n));
  DimValue d;
  d.empty_ = false;
  d.value_ = n;
  return d;
}

std::int64_t DimValue::value() const {
  if (empty_) fail(ErrorKind::InvalidArgument, "the empty set has no finite dimension");
  return value_;
}

DimValue max(const DimValue& a, const DimValue& b) {
  if (a.empty_) return b;
  if (b.empty_) return a;
  return a.value_ >= b.value_ ? a : b;
}

std::string DimValue::to_string() const { return empty_ ? "empty" : std::to_string(value_); }

VirtualDimension virtual_dimension_exact(const AffineWeylElt& w, const StraightClass& c) {
  const RootDatum& d = w.datum();
  EtaDecomposition eta = eta_decomposition(w);
  std::int64_t base = length(w) + eta.eta.length() - c.defect;
  Rational by_class = Rational(base - c.length, 2);
  Rational rho_nu = dot(d.two_rho(), c.nu_bar) / Rational(2);
  if (rho_nu * Rational(2) != Rational(c.length)) fail(ErrorKind::Internal, "class length differs from <2 rho, nu>");
  Rational by_newton = Rational(base, 2) - rho_nu;
  return {by_class, by_newton, std::move(eta)};
}

std::int64_t virtual_dimension(const AffineWeylElt& w, const StraightClass& c) {
  return integral(virtual_dimension_exact(w, c).by_class, ErrorKind::NonIntegralHalf, "virtual dimension");
}

std::int64_t springer_dim_from_invariants(const RootDatum& d, const GammaDescriptor& gd) {
  if (!gd.d_gamma || !gd.c_gamma) fail(ErrorKind::InvalidArgument, "d(gamma) and c(gamma) are both required");
  const StraightClass& c = gd.straight_class;
  Rational v = dot(d.two_rho(), c.nu_bar) / Rational(2) + Rational(c.defect, 2) + Rational(*gd.d_gamma - *gd.c_gamma, 2);
  std::int64_t n = integral(v, ErrorKind::NonIntegralDimension, "affine Springer fiber dimension");
  if (n < 0) fail(ErrorKind::NegativeDimension, "affine Springer fiber dimension would be " + std::to_string(n));
  return n;
}

std::int64_t resolve_springer_dim(const RootDatum& d, const GammaDescriptor& gd) {
  if (gd.springer_dim && *gd.springer_dim < 0) fail(ErrorKind::NegativeDimension, "affine Springer fiber dimension is negative");
  if (gd.d_gamma || gd.c_gamma) {
    std::int64_t n = springer_dim_from_invariants(d, gd);
    if (gd.springer_dim && *gd.springer_dim != n) {
      fail(ErrorKind::InvalidArgument, "springer_dim " + std::to_string(*gd.springer_dim) + " disagrees with d and c, which give " + std::to_string(n));
    }
    return n;
  }
  if (!gd.springer_dim) fail(ErrorKind::InvalidArgument, "need springer_dim or both d(gamma) and c(gamma)");
  return *gd.springer_dim;
}

DimEngine::DimEngine(std::shared_ptr<const ClassEngine> classes, std::optional<std::filesystem::path> cache_dir)
    : classes_(std::move(classes)), cache_dir_(std::move(cache_dir)) {
  load_cache();
}

const DimProfile& DimEngine::profile(const AffineWeylElt& w, WitnessPolicy policy) const {
  auto& memo = memo_[policy == WitnessPolicy::First ? 0 : 1];
  {
    std::shared_lock lock(mu_);
    auto it = memo.find(w);
    if (it != memo.end()) {
      ++hits_;
      return it->second;
    }
  }
  DimProfile result;
  if (auto d = classes_->find_descent(w, policy)) {
    const AffineWeylElt& s = classes_->group().generator(d->generator);
    AffineWeylElt sw = s * d->w_prime;
    AffineWeylElt sws = sw * s;
    result = profile(sw, policy);
    for (const auto& [c, v] : profile(sws, policy)) {
      auto [it, fresh] = result.try_emplace(c, v);
      if (!fresh && v > it->second) it->second = v;
    }
    for (auto& [c, v] : result) ++v;
  } else {
    StraightClass c = classes_->straight_class_of(w);
    result.emplace(c, length(w) - c.length);
  }
  ++computed_;
  std::unique_lock lock(mu_);
  return memo.try_emplace(w, std::move(result)).first->second;
}

FlagStep DimEngine::explain(const AffineWeylElt& w) const {
  FlagStep step;
  step.descent = classes_->find_descent(w);
  step.minimal = !step.descent;
  if (step.minimal) step.ux = classes_->ux_decompose(w);
  step.profile = profile(w);
  return step;
}

DimValue DimEngine::dim_X_flag(const AffineWeylElt& w, const StraightClass& c, WitnessPolicy policy) const {
  const DimProfile& p = profile(w, policy);
  auto it = p.find(c);
  return it == p.end() ? DimValue::empty() : DimValue::finite(it->second);
}

DimValue DimEngine::dim_X_grass(const IntVector& mu, const StraightClass& c) const {
  const RootDatum& d = datum();
  RatVector m = to_rational(mu);
  if (!d.is_dominant(m)) fail(ErrorKind::NotDominant, "mu must be dominant");
  if (d.kappa_class(mu) != c.kappa || !d.dominance_leq(c.nu_bar, m)) return DimValue::empty();
  Rational v = dot(d.two_rho(), m - c.nu_bar) / Rational(2) - Rational(c.defect, 2);
  return DimValue::finite(integral(v, ErrorKind::NonIntegralDimension, "Grassmannian dimension"));
}

DimValue DimEngine::dim_Y_flag(const AffineWeylElt& w, const GammaDescriptor& gd) const {
  std::int64_t sd = resolve_springer_dim(datum(), gd);
  return dim_X_flag(w, gd.straight_class).plus(sd);
}

DimValue DimEngine::dim_Y_grass(const IntVector& mu, const GammaDescriptor& gd) const {
  std::int64_t sd = resolve_springer_dim(datum(), gd);
  return dim_X_grass(mu, gd.straight_class).plus(sd);
}

DimValue DimEngine::dim_Y_superregular(const FiniteWeylElt& x, const IntVector& mu, const FiniteWeylElt& y,
                                       const GammaDescriptor& gd) const {
  const RootDatum& d = datum();
  const StraightClass& c = gd.straight_class;
  RatVector m = to_rational(mu);
  for (int i = 0; i < d.semisimple_rank(); ++i) {
    if (dot(d.simple_root(i), mu) < 2) fail(ErrorKind::HypothesisViolated, "<alpha_" + std::to_string(i + 1) + ", mu> < 2");
  }
  if (!d.dominance_leq(c.nu_bar + to_rational(d.two_rho_check()), m)) {
    fail(ErrorKind::HypothesisViolated, "nu + 2 rho^vee is not below mu");
  }
  std::int64_t sd = resolve_springer_dim(d, gd);
  AffineWeylElt w = AffineWeylElt::finite(x) * AffineWeylElt(mu, y);
  EtaDecomposition eta = eta_decomposition(w);
  if (!(eta.x == x) || eta.mu != mu || !(eta.y == y)) fail(ErrorKind::DecompositionFailure, "x t^mu y is not in canonical form");

  DimValue result = DimValue::empty();
  if (d.kappa_class(mu) == c.kappa && static_cast<int>(support(y * x).size()) == d.semisimple_rank()) {
    result = DimValue::finite(virtual_dimension(w, c) + sd);
  }
  DimValue flag = dim_Y_flag(w, gd);
  if (!(flag == result)) {
    fail(ErrorKind::Internal, "superregular formula gives " + result.to_string() + " but the reduction gives " + flag.to_string());
  }
  return result;
}

std::optional<std::filesystem::path> DimEngine::cache_file() const {
  if (!cache_dir_) return std::nullopt;
  return *cache_dir_ / ("weylcalc-" + datum().fingerprint() + ".json");
}

void DimEngine::load_cache() {
  auto file = cache_file();
  if (!file || !std::filesystem::exists(*file)) return;
  std::ifstream in(*file);
  nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
  // A cache from another version or datum is ignored and overwritten on save.
  if (j.is_discarded() || !j.is_object() || j.value("version", 0) != kCacheVersion || j.value("datum", "") != datum().fingerprint()) return;
  try {
    for (const auto& e : j.at("entries")) {
      AffineWeylElt w = element_from_json(classes_->group(), e.at("element"));
      DimProfile p;
      for (const auto& pc : e.at("profile")) {
        StraightClass c{KappaClass{int_vector_from_json(pc.at("kappa"))}, rat_vector_from_json(pc.at("nu")),
                        pc.at("length").get<int>(), pc.at("defect").get<int>()};
        p.emplace(std::move(c), pc.at("dim").get<std::int64_t>());
      }
      memo_[0].emplace(std::move(w), std::move(p));
    }
  } catch (const std::exception&) {
    memo_[0].clear();
    return;
  }
  loaded_ = memo_[0].size();
}

void DimEngine::save_cache() const {
  auto file = cache_file();
  if (!file) return;
  std::vector<std::pair<AffineWeylElt, DimProfile>> entries;
  {
    std::shared_lock lock(mu_);
    entries.assign(memo_[0].begin(), memo_[0].end());
  }
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  nlohmann::json list = nlohmann::json::array();
  for (const auto& [w, p] : entries) {
    nlohmann::json prof = nlohmann::json::array();
    for (const auto& [c, v] : p) {
      nlohmann::json pc = to_json(c);
      pc["dim"] = v;
      prof.push_back(std::move(pc));
    }
    list.push_back({{"element", to_json(w)}, {"profile", std::move(prof)}});
  }
  nlohmann::json j{{"version", kCacheVersion}, {"datum", datum().fingerprint()}, {"entries", std::move(list)}};
  std::filesystem::create_directories(file->parent_path());
  std::filesystem::path tmp = *file;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) fail(ErrorKind::InvalidArgument, "cannot write cache file " + tmp.string());
    out << j.dump() << '\n';
  }
  std::filesystem::rename(tmp, *file);
}

CacheStats DimEngine::cache_stats() const { return {loaded_, hits_.load(), computed_.load()}; }

}  // namespace weylcalc
