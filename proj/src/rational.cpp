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

#include "weylcalc/rational.hpp"

#include <cstdlib>
#include <sstream>

namespace weylcalc {

namespace {

std::int64_t abs64(std::int64_t v) {
  if (v == INT64_MIN) fail(ErrorKind::ArithmeticOverflow, "integer overflow in abs");
  return v < 0 ? -v : v;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) fail(ErrorKind::InvalidArgument, "rational with zero denominator");
  if (d < 0) {
    n = checked::sub(0, n);
    d = checked::sub(0, d);
  }
  std::int64_t g = std::gcd(abs64(n), d);
  if (g == 0) g = 1;
  num_ = n / g;
  den_ = d / g;
}

std::int64_t Rational::to_integer() const {
  if (den_ != 1) fail(ErrorKind::InvalidArgument, "rational " + to_string() + " is not an integer");
  return num_;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      std::int64_t n = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return Rational(n);
    }
    std::string a = text.substr(0, slash);
    std::string b = text.substr(slash + 1);
    std::int64_t n = std::stoll(a, &used);
    if (used != a.size()) throw std::invalid_argument(text);
    std::int64_t d = std::stoll(b, &used);
    if (used != b.size()) throw std::invalid_argument(text);
    return Rational(n, d);
  } catch (const std::logic_error&) {
    fail(ErrorKind::InvalidArgument, "cannot parse rational '" + text + "'");
  }
}

Rational& Rational::operator+=(const Rational& o) {
  std::int64_t g = std::gcd(den_, o.den_);
  std::int64_t n = checked::add(checked::mul(num_, o.den_ / g), checked::mul(o.num_, den_ / g));
  *this = Rational(n, checked::mul(den_ / g, o.den_));
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  std::int64_t g1 = std::gcd(abs64(num_), o.den_);
  std::int64_t g2 = std::gcd(abs64(o.num_), den_);
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  *this = Rational(checked::mul(num_ / g1, o.num_ / g2), checked::mul(den_ / g2, o.den_ / g1));
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) fail(ErrorKind::InvalidArgument, "division by zero");
  return *this *= Rational(o.den_, o.num_);
}

RatVector to_rational(const IntVector& v) { return RatVector(v.begin(), v.end()); }

RatVector operator+(const RatVector& a, const RatVector& b) {
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVector operator-(const RatVector& a, const RatVector& b) {
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVector scaled(const RatVector& v, const Rational& c) {
  RatVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] * c;
  return r;
}

IntVector operator+(const IntVector& a, const IntVector& b) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked::add(a[i], b[i]);
  return r;
}

IntVector operator-(const IntVector& a, const IntVector& b) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked::sub(a[i], b[i]);
  return r;
}

IntVector negated(const IntVector& v) {
  IntVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = checked::sub(0, v[i]);
  return r;
}

std::int64_t dot(const IntVector& a, const IntVector& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = checked::add(s, checked::mul(a[i], b[i]));
  return s;
}

Rational dot(const IntVector& a, const RatVector& b) {
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += b[i] * Rational(a[i]);
  return s;
}

std::string to_string(const IntVector& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ']';
  return os.str();
}

std::string to_string(const RatVector& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ']';
  return os.str();
}

std::size_t VectorHash::operator()(const IntVector& v) const noexcept {
  std::size_t seed = v.size();
  for (auto x : v) hash_combine(seed, std::hash<std::int64_t>{}(x));
  return seed;
}

}  // namespace weylcalc
