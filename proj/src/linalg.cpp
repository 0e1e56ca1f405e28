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

#include "weylcalc/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

namespace weylcalc {

IntMatrix::IntMatrix(int rows, int cols, std::vector<std::int64_t> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != static_cast<std::size_t>(rows * cols))
    fail(ErrorKind::InvalidArgument, "matrix data has wrong size");
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r ? static_cast<int>(rows[0].size()) : 0;
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c)
      fail(ErrorKind::InvalidArgument, "ragged matrix rows");
    for (int j = 0; j < c; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& cols) {
  return from_rows(cols).transpose();
}

IntVector IntMatrix::row(int i) const {
  return IntVector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

IntVector IntMatrix::column(int j) const {
  IntVector v(static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i) v[static_cast<std::size_t>(i)] = (*this)(i, j);
  return v;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

IntVector IntMatrix::apply(const IntVector& v) const {
  IntVector r(static_cast<std::size_t>(rows_), 0);
  for (int i = 0; i < rows_; ++i) {
    std::int64_t s = 0;
    for (int j = 0; j < cols_; ++j)
      s = checked::add(s, checked::mul((*this)(i, j), v[static_cast<std::size_t>(j)]));
    r[static_cast<std::size_t>(i)] = s;
  }
  return r;
}

RatVector IntMatrix::apply(const RatVector& v) const {
  RatVector r(static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i) {
    Rational s;
    for (int j = 0; j < cols_; ++j) {
      auto e = (*this)(i, j);
      if (e != 0) s += v[static_cast<std::size_t>(j)] * Rational(e);
    }
    r[static_cast<std::size_t>(i)] = s;
  }
  return r;
}

IntVector IntMatrix::apply_left(const IntVector& v) const {
  IntVector r(static_cast<std::size_t>(cols_), 0);
  for (int j = 0; j < cols_; ++j) {
    std::int64_t s = 0;
    for (int i = 0; i < rows_; ++i)
      s = checked::add(s, checked::mul(v[static_cast<std::size_t>(i)], (*this)(i, j)));
    r[static_cast<std::size_t>(j)] = s;
  }
  return r;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) fail(ErrorKind::InvalidArgument, "matrix shape mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      auto e = a(i, k);
      if (e == 0) continue;
      for (int j = 0; j < b.cols_; ++j) c(i, j) = checked::add(c(i, j), checked::mul(e, b(k, j)));
    }
  return c;
}

std::size_t IntMatrix::hash() const noexcept {
  std::size_t seed = static_cast<std::size_t>(rows_ * 131 + cols_);
  for (auto x : data_) hash_combine(seed, std::hash<std::int64_t>{}(x));
  return seed;
}

namespace {

// Row-reduces in place; returns rank. Tracks the sign of row swaps in *swaps.
int row_reduce(std::vector<RatVector>& m, int ncols, int* swaps) {
  int r = 0;
  int nrows = static_cast<int>(m.size());
  for (int c = 0; c < ncols && r < nrows; ++c) {
    int piv = -1;
    for (int i = r; i < nrows; ++i)
      if (!m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) {
      std::swap(m[static_cast<std::size_t>(piv)], m[static_cast<std::size_t>(r)]);
      if (swaps) ++*swaps;
    }
    auto& prow = m[static_cast<std::size_t>(r)];
    for (int i = 0; i < nrows; ++i) {
      if (i == r) continue;
      auto& row = m[static_cast<std::size_t>(i)];
      if (row[static_cast<std::size_t>(c)].is_zero()) continue;
      Rational f = row[static_cast<std::size_t>(c)] / prow[static_cast<std::size_t>(c)];
      for (std::size_t j = 0; j < row.size(); ++j) row[j] -= f * prow[j];
    }
    ++r;
  }
  return r;
}

}  // namespace

Rational determinant(std::vector<RatVector> m) {
  int n = static_cast<int>(m.size());
  Rational det = 1;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (!m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) return 0;
    if (piv != c) {
      std::swap(m[static_cast<std::size_t>(piv)], m[static_cast<std::size_t>(c)]);
      det = -det;
    }
    const auto& prow = m[static_cast<std::size_t>(c)];
    det *= prow[static_cast<std::size_t>(c)];
    for (int i = c + 1; i < n; ++i) {
      auto& row = m[static_cast<std::size_t>(i)];
      if (row[static_cast<std::size_t>(c)].is_zero()) continue;
      Rational f = row[static_cast<std::size_t>(c)] / prow[static_cast<std::size_t>(c)];
      for (int j = c; j < n; ++j) row[static_cast<std::size_t>(j)] -= f * prow[static_cast<std::size_t>(j)];
    }
  }
  return det;
}

int rank(std::vector<RatVector> rows) {
  if (rows.empty()) return 0;
  return row_reduce(rows, static_cast<int>(rows[0].size()), nullptr);
}

std::optional<RatVector> solve(const std::vector<RatVector>& a, const RatVector& b) {
  int nrows = static_cast<int>(a.size());
  int ncols = nrows ? static_cast<int>(a[0].size()) : 0;
  std::vector<RatVector> aug(a);
  for (int i = 0; i < nrows; ++i) aug[static_cast<std::size_t>(i)].push_back(b[static_cast<std::size_t>(i)]);
  int r = row_reduce(aug, ncols, nullptr);
  RatVector x(static_cast<std::size_t>(ncols));
  for (int i = 0; i < nrows; ++i) {
    const auto& row = aug[static_cast<std::size_t>(i)];
    int lead = -1;
    for (int j = 0; j < ncols; ++j)
      if (!row[static_cast<std::size_t>(j)].is_zero()) {
        lead = j;
        break;
      }
    if (lead < 0) {
      if (!row[static_cast<std::size_t>(ncols)].is_zero()) return std::nullopt;
      continue;
    }
    // Free variables are set to zero, so the pivot variable takes the rhs.
    x[static_cast<std::size_t>(lead)] = row[static_cast<std::size_t>(ncols)] / row[static_cast<std::size_t>(lead)];
  }
  (void)r;
  return x;
}

std::vector<RatVector> to_rational_rows(const IntMatrix& m) {
  std::vector<RatVector> rows;
  for (int i = 0; i < m.rows(); ++i) rows.push_back(to_rational(m.row(i)));
  return rows;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  int n = m.rows();
  if (n != m.cols()) fail(ErrorKind::InvalidArgument, "inverse of non-square matrix");
  std::vector<RatVector> aug = to_rational_rows(m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) aug[static_cast<std::size_t>(i)].push_back(Rational(i == j ? 1 : 0));
  if (row_reduce(aug, n, nullptr) != n) fail(ErrorKind::InvalidArgument, "singular matrix");
  IntMatrix inv(n, n);
  for (int i = 0; i < n; ++i) {
    const auto& row = aug[static_cast<std::size_t>(i)];
    Rational piv = row[static_cast<std::size_t>(i)];
    for (int j = 0; j < n; ++j) {
      Rational e = row[static_cast<std::size_t>(n + j)] / piv;
      if (!e.is_integer()) fail(ErrorKind::InvalidArgument, "matrix is not unimodular");
      inv(i, j) = e.num();
    }
  }
  return inv;
}

SmithForm smith_normal_form(const IntMatrix& c) {
  const int r = c.rows();
  const int n = c.cols();
  IntMatrix a = c;
  IntMatrix u = IntMatrix::identity(r);
  IntMatrix uinv = IntMatrix::identity(r);

  auto swap_rows = [&](int i, int j) {
    for (int k = 0; k < n; ++k) std::swap(a(i, k), a(j, k));
    for (int k = 0; k < r; ++k) std::swap(u(i, k), u(j, k));
    for (int k = 0; k < r; ++k) std::swap(uinv(k, i), uinv(k, j));
  };
  // row_i += q * row_j
  auto add_row = [&](int i, int j, std::int64_t q) {
    for (int k = 0; k < n; ++k) a(i, k) = checked::add(a(i, k), checked::mul(q, a(j, k)));
    for (int k = 0; k < r; ++k) u(i, k) = checked::add(u(i, k), checked::mul(q, u(j, k)));
    for (int k = 0; k < r; ++k) uinv(k, j) = checked::sub(uinv(k, j), checked::mul(q, uinv(k, i)));
  };
  auto negate_row = [&](int i) {
    for (int k = 0; k < n; ++k) a(i, k) = -a(i, k);
    for (int k = 0; k < r; ++k) u(i, k) = -u(i, k);
    for (int k = 0; k < r; ++k) uinv(k, i) = -uinv(k, i);
  };
  auto swap_cols = [&](int i, int j) {
    for (int k = 0; k < r; ++k) std::swap(a(k, i), a(k, j));
  };
  auto add_col = [&](int i, int j, std::int64_t q) {
    for (int k = 0; k < r; ++k) a(k, i) = checked::add(a(k, i), checked::mul(q, a(k, j)));
  };

  std::vector<std::int64_t> diag;
  for (int t = 0; t < std::min(r, n); ++t) {
    while (true) {
      int pi = -1, pj = -1;
      for (int i = t; i < r; ++i)
        for (int j = t; j < n; ++j)
          if (a(i, j) != 0 && (pi < 0 || std::llabs(a(i, j)) < std::llabs(a(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi < 0) break;
      if (pi != t) swap_rows(pi, t);
      if (pj != t) swap_cols(pj, t);
      bool clean = true;
      for (int i = t + 1; i < r; ++i) {
        if (a(i, t) == 0) continue;
        add_row(i, t, -(a(i, t) / a(t, t)));
        if (a(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < n; ++j) {
        if (a(t, j) == 0) continue;
        add_col(j, t, -(a(t, j) / a(t, t)));
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      bool divides = true;
      for (int i = t + 1; i < r && divides; ++i)
        for (int j = t + 1; j < n; ++j)
          if (a(i, j) % a(t, t) != 0) {
            add_row(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (a(t, t) == 0) break;
    if (a(t, t) < 0) negate_row(t);
    diag.push_back(a(t, t));
  }
  return SmithForm{u, uinv, diag};
}

}  // namespace weylcalc
