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

#include "weylcalc/oracle.hpp"

#include <algorithm>
#include <limits>

#include "weylcalc/errors.hpp"

namespace weylcalc {

std::vector<AffineWeylElt> Ball::elements() const {
  std::vector<AffineWeylElt> out;
  out.reserve(distance.size());
  for (const auto& [w, d] : distance) out.push_back(w);
  return out;
}

std::vector<AffineWeylElt> Ball::sphere(int r) const {
  std::vector<AffineWeylElt> out;
  for (const auto& [w, d] : distance) {
    if (d == r) out.push_back(w);
  }
  return out;
}

bool normalizes_generators(const AffineWeylGroup& g, const AffineWeylElt& w) {
  AffineWeylElt wi = w.inverse();
  for (int a = 0; a < g.num_generators(); ++a) {
    AffineWeylElt c = w * g.generator(a) * wi;
    bool found = false;
    for (int b = 0; b < g.num_generators() && !found; ++b) found = c == g.generator(b);
    if (!found) return false;
  }
  return true;
}

Ball cayley_ball(const AffineWeylGroup& g, int radius, std::size_t budget) {
  Ball ball;
  ball.radius = radius;
  std::vector<AffineWeylElt> frontier;
  if (g.datum().pi1_finite()) {
    for (const AffineWeylElt& t : g.omega_elements()) {
      if (!normalizes_generators(g, t)) fail(ErrorKind::Internal, "length-zero element does not normalize the generators");
      frontier.push_back(t);
    }
  } else {
    frontier.push_back(AffineWeylElt::identity(g.datum()));
  }
  for (const AffineWeylElt& t : frontier) ball.distance.emplace(t, 0);
  for (int r = 1; r <= radius; ++r) {
    std::vector<AffineWeylElt> next;
    for (const AffineWeylElt& w : frontier) {
      for (int s = 0; s < g.num_generators(); ++s) {
        AffineWeylElt v = g.generator(s) * w;
        if (ball.distance.emplace(v, r).second) {
          if (ball.distance.size() > budget) fail(ErrorKind::ExplorationBudgetExceeded, "Cayley ball exceeds the budget");
          next.push_back(std::move(v));
        }
      }
    }
    frontier = std::move(next);
  }
  return ball;
}

int brute_min_length(const Ball& ball, const AffineWeylElt& w) {
  int inner = std::numeric_limits<int>::max();
  int outer = std::numeric_limits<int>::max();
  for (const auto& [h, d] : ball.distance) {
    int l = length(h * w * h.inverse());
    outer = std::min(outer, l);
    if (d < ball.radius) inner = std::min(inner, l);
  }
  if (ball.radius > 0 && outer < inner) fail(ErrorKind::Inconclusive, "conjugate minimum still decreasing at the ball boundary");
  return outer;
}

int brute_min_length(const AffineWeylGroup& g, const AffineWeylElt& w, int radius) {
  return brute_min_length(cayley_ball(g, radius), w);
}

bool brute_straight_check(const AffineWeylElt& w, int n_max) {
  int l = length(w);
  AffineWeylElt p = w;
  for (int n = 1; n <= n_max; ++n) {
    if (length(p) != n * l) return false;
    p = p * w;
  }
  return true;
}

}  // namespace weylcalc
