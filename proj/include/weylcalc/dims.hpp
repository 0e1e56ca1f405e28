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

#ifndef WEYLCALC_DIMS_HPP
#define WEYLCALC_DIMS_HPP

#include <array>
#include <atomic>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>

#include "weylcalc/classes.hpp"

namespace weylcalc {

/// A dimension, where the empty set has dimension -infinity.
class DimValue {
 public:
  static DimValue empty() { return DimValue(); }
  static DimValue finite(std::int64_t n);

  bool is_empty() const { return empty_; }
  /// Throws InvalidArgument on Empty.
  std::int64_t value() const;

  DimValue plus(std::int64_t n) const { return empty_ ? *this : finite(value_ + n); }
  friend DimValue max(const DimValue& a, const DimValue& b);
  friend bool operator==(const DimValue&, const DimValue&) = default;

  std::string to_string() const;  // "empty" or the number

 private:
  bool empty_ = true;
  std::int64_t value_ = 0;
};

/// Class data of a regular semisimple element: its straight class and the
/// dimension of its affine Springer fiber, given directly or through the
/// discriminant valuation d and the rank drop c.
struct GammaDescriptor {
  StraightClass straight_class;
  std::optional<std::int64_t> springer_dim;
  std::optional<std::int64_t> d_gamma;
  std::optional<std::int64_t> c_gamma;
};

struct VirtualDimension {
  Rational by_class;   // (l(w) + l(eta) - def(C) - l(C)) / 2
  Rational by_newton;  // (l(w) + l(eta) - def(C)) / 2 - <rho, nu_bar>
  EtaDecomposition eta;
};

VirtualDimension virtual_dimension_exact(const AffineWeylElt& w, const StraightClass& c);
/// Throws NonIntegralHalf when the value is not an integer.
std::int64_t virtual_dimension(const AffineWeylElt& w, const StraightClass& c);

/// <rho, nu_bar> + def/2 + (d - c)/2.
std::int64_t springer_dim_from_invariants(const RootDatum& d, const GammaDescriptor& gd);
/// The springer dimension of gd, checking consistency when both forms are given.
std::int64_t resolve_springer_dim(const RootDatum& d, const GammaDescriptor& gd);

/// dim X_w(C) for every straight class C with X_w(C) nonempty.
using DimProfile = std::map<StraightClass, std::int64_t>;

/// How the recursion treated one element.
struct FlagStep {
  bool minimal = false;
  std::optional<Descent> descent;       // when not minimal
  std::optional<UxDecomposition> ux;    // when minimal
  DimProfile profile;
};

struct CacheStats {
  std::size_t loaded = 0;
  std::size_t hits = 0;
  std::size_t computed = 0;
};

/// Dimension evaluators built on a ClassEngine. The reduction recursion is
/// memoized per element as a DimProfile, which can be persisted to
/// <cache_dir>/weylcalc-<datum fingerprint>.json.
class DimEngine {
 public:
  explicit DimEngine(std::shared_ptr<const ClassEngine> classes, std::optional<std::filesystem::path> cache_dir = std::nullopt);

  const ClassEngine& classes() const { return *classes_; }
  const RootDatum& datum() const { return classes_->datum(); }

  const DimProfile& profile(const AffineWeylElt& w, WitnessPolicy policy = WitnessPolicy::First) const;
  FlagStep explain(const AffineWeylElt& w) const;

  DimValue dim_X_flag(const AffineWeylElt& w, const StraightClass& c, WitnessPolicy policy = WitnessPolicy::First) const;
  DimValue dim_X_grass(const IntVector& mu, const StraightClass& c) const;
  DimValue dim_Y_flag(const AffineWeylElt& w, const GammaDescriptor& gd) const;
  DimValue dim_Y_grass(const IntVector& mu, const GammaDescriptor& gd) const;
  /// Throws HypothesisViolated unless <alpha_i, mu> >= 2 for all i and
  /// nu_bar + 2 rho^vee <= mu.
  DimValue dim_Y_superregular(const FiniteWeylElt& x, const IntVector& mu, const FiniteWeylElt& y, const GammaDescriptor& gd) const;

  std::optional<std::filesystem::path> cache_file() const;
  /// Writes the First-policy memo to the cache file, if one is configured.
  void save_cache() const;
  CacheStats cache_stats() const;

 private:
  void load_cache();

  std::shared_ptr<const ClassEngine> classes_;
  std::optional<std::filesystem::path> cache_dir_;

  mutable std::shared_mutex mu_;
  mutable std::array<std::unordered_map<AffineWeylElt, DimProfile, AffineWeylHash>, 2> memo_;
  std::size_t loaded_ = 0;
  mutable std::atomic<std::size_t> hits_{0};
  mutable std::atomic<std::size_t> computed_{0};
};

}  // namespace weylcalc

#endif  // WEYLCALC_DIMS_HPP
