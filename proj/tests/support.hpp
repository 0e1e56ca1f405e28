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

// Shared helpers for the unit tests.

#ifndef WEYLCALC_TESTS_SUPPORT_HPP
#define WEYLCALC_TESTS_SUPPORT_HPP

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "weylcalc/affweyl.hpp"
#include "weylcalc/finiteweyl.hpp"
#include "weylcalc/rootdata.hpp"

namespace wt {

using namespace weylcalc;

inline std::shared_ptr<const AffineWeylGroup> group(const std::string& preset) {
  return std::make_shared<const AffineWeylGroup>(RootDatum::preset(preset));
}

/// Finite element from a word of 1-based simple labels.
inline FiniteWeylElt fw(const RootDatum& d, const std::vector<int>& word) {
  std::vector<int> w;
  for (int s : word) w.push_back(s - 1);
  return FiniteWeylElt::from_word(d, w);
}

/// t^lambda times the finite word.
inline AffineWeylElt elt(const RootDatum& d, IntVector lambda, const std::vector<int>& word = {}) {
  return AffineWeylElt(std::move(lambda), fw(d, word));
}

/// Product of generators given by label (1..n finite, 0 affine).
inline AffineWeylElt gen_word(const AffineWeylGroup& g, const std::vector<int>& labels) {
  std::vector<int> pos;
  for (int l : labels) pos.push_back(g.generator_position(l));
  return g.from_generator_word(pos);
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 r(20261016);
  return r;
}

/// Random product of up to max_word generators, times a random Omega element.
inline AffineWeylElt random_element(const AffineWeylGroup& g, int max_word) {
  std::uniform_int_distribution<int> len(0, max_word);
  std::uniform_int_distribution<int> gen(0, g.num_generators() - 1);
  AffineWeylElt w = AffineWeylElt::identity(g.datum());
  int n = len(rng());
  for (int i = 0; i < n; ++i) w = w * g.generator(gen(rng()));
  if (g.datum().pi1_finite()) {
    const auto& om = g.omega_elements();
    std::uniform_int_distribution<std::size_t> pick(0, om.size() - 1);
    w = w * om[pick(rng())];
  }
  return w;
}

inline RatVector rv(std::initializer_list<Rational> xs) { return RatVector(xs); }

}  // namespace wt

#endif  // WEYLCALC_TESTS_SUPPORT_HPP
