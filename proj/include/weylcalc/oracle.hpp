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

#ifndef WEYLCALC_ORACLE_HPP
#define WEYLCALC_ORACLE_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "weylcalc/affweyl.hpp"

namespace weylcalc {

/// Elements within Cayley distance `radius` of the length-zero subgroup,
/// with distances measured by breadth-first search over left multiplication
/// by the affine simple reflections. Never consults the length formula.
struct Ball {
  int radius = 0;
  std::map<AffineWeylElt, int> distance;

  std::vector<AffineWeylElt> elements() const;
  std::vector<AffineWeylElt> sphere(int r) const;
};

/// True iff conjugation by w permutes the affine simple reflections.
bool normalizes_generators(const AffineWeylGroup& g, const AffineWeylElt& w);

/// BFS starting from the length-zero elements (or the identity when X/Q^vee
/// is infinite). Throws ExplorationBudgetExceeded past `budget` elements.
Ball cayley_ball(const AffineWeylGroup& g, int radius, std::size_t budget = 1'000'000);

/// min l(h w h^-1) over h in the ball. Throws Inconclusive when the minimum
/// over the full ball is smaller than over the ball of radius - 1.
int brute_min_length(const Ball& ball, const AffineWeylElt& w);
int brute_min_length(const AffineWeylGroup& g, const AffineWeylElt& w, int radius);

/// l(w^n) == n l(w) for n = 1..n_max.
bool brute_straight_check(const AffineWeylElt& w, int n_max);

}  // namespace weylcalc

#endif  // WEYLCALC_ORACLE_HPP
