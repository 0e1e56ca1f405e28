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

#ifndef WEYLCALC_LINALG_HPP
#define WEYLCALC_LINALG_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "weylcalc/rational.hpp"

namespace weylcalc {

/// Dense row-major integer matrix. Small sizes only (rank of a root datum).
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), 0) {}
  IntMatrix(int rows, int cols, std::vector<std::int64_t> data);

  static IntMatrix identity(int n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows);
  static IntMatrix from_columns(const std::vector<IntVector>& cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::int64_t& operator()(int i, int j) { return data_[static_cast<std::size_t>(i * cols_ + j)]; }
  std::int64_t operator()(int i, int j) const { return data_[static_cast<std::size_t>(i * cols_ + j)]; }
  const std::vector<std::int64_t>& data() const { return data_; }

  IntVector row(int i) const;
  IntVector column(int j) const;
  IntMatrix transpose() const;
  bool is_identity() const;

  IntVector apply(const IntVector& v) const;
  RatVector apply(const RatVector& v) const;
  /// Row vector times matrix: v^T M.
  IntVector apply_left(const IntVector& v) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;
  friend auto operator<=>(const IntMatrix& a, const IntMatrix& b) = default;

  std::size_t hash() const noexcept;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// Exact determinant of a square rational matrix.
Rational determinant(std::vector<RatVector> m);

/// Rank of a rational matrix given by rows.
int rank(std::vector<RatVector> rows);

/// Solves A x = b over Q. Returns one solution, or nullopt if inconsistent.
std::optional<RatVector> solve(const std::vector<RatVector>& a, const RatVector& b);

/// Inverse of a unimodular integer matrix; throws if det is not +-1.
IntMatrix unimodular_inverse(const IntMatrix& m);

std::vector<RatVector> to_rational_rows(const IntMatrix& m);

/// Smith normal form data for an r x n integer matrix C: left * C * V = D
/// with left unimodular and D diagonal with d_1 | d_2 | ... . Only the left
/// transform and the nonzero diagonal are kept; V is not needed downstream.
struct SmithForm {
  IntMatrix left;
  IntMatrix left_inverse;
  std::vector<std::int64_t> diagonal;  // nonzero invariant factors, length = rank
};

SmithForm smith_normal_form(const IntMatrix& c);

}  // namespace weylcalc

#endif  // WEYLCALC_LINALG_HPP
