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

#ifndef WEYLCALC_RATIONAL_HPP
#define WEYLCALC_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "weylcalc/errors.hpp"

namespace weylcalc {

namespace checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorKind::ArithmeticOverflow, "integer overflow in addition");
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) fail(ErrorKind::ArithmeticOverflow, "integer overflow in subtraction");
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorKind::ArithmeticOverflow, "integer overflow in multiplication");
  return r;
}

}  // namespace checked

/// Exact rational number over 64-bit integers. Every operation is overflow
/// checked and throws ArithmeticOverflow instead of wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit by design of arithmetic use
  Rational(std::int64_t n, std::int64_t d);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return (num_ > 0) - (num_ < 0); }

  /// Throws InvalidArgument when not integral.
  std::int64_t to_integer() const;

  std::string to_string() const;
  static Rational parse(const std::string& text);

  Rational operator-() const { return Rational(checked::sub(0, num_), den_, raw_tag{}); }
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return checked::mul(a.num_, b.den_) <=> checked::mul(b.num_, a.den_);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  struct raw_tag {};
  Rational(std::int64_t n, std::int64_t d, raw_tag) : num_(n), den_(d) {}

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

using IntVector = std::vector<std::int64_t>;
using RatVector = std::vector<Rational>;

RatVector to_rational(const IntVector& v);
RatVector operator+(const RatVector& a, const RatVector& b);
RatVector operator-(const RatVector& a, const RatVector& b);
RatVector scaled(const RatVector& v, const Rational& c);
IntVector operator+(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a, const IntVector& b);
IntVector negated(const IntVector& v);

std::int64_t dot(const IntVector& a, const IntVector& b);
Rational dot(const IntVector& a, const RatVector& b);

std::string to_string(const IntVector& v);
std::string to_string(const RatVector& v);

struct VectorHash {
  std::size_t operator()(const IntVector& v) const noexcept;
};

inline void hash_combine(std::size_t& seed, std::size_t value) noexcept {
  seed ^= value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace weylcalc

#endif  // WEYLCALC_RATIONAL_HPP
