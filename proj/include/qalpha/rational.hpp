// Copyright 2026 The qalpha Authors
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

#ifndef QALPHA_RATIONAL_HPP
#define QALPHA_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "qalpha/errors.hpp"

namespace qalpha {

// The four arithmetic operations, used for dispatch across the layers.
enum class ArithOp { Add, Sub, Mul, Div };

ArithOp arith_op_from_name(std::string_view name);
std::string_view arith_op_name(ArithOp op);

/// Arbitrary-precision rational number, always in canonical form:
/// denominator > 0, gcd(|num|, den) = 1, zero is 0/1. Backed by GMP.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}  // NOLINT: implicit by design
  Rational(long n, long d);
  Rational(const mpz_class& n, const mpz_class& d);
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  // Accepts "-3", "2/7", "0.25", "1e-9", "-1.5e3". Throws parse_error.
  static Rational from_string(std::string_view s);
  // Exact value of the IEEE double. Throws parse_error on NaN/infinity.
  static Rational from_double(double x);

  const mpz_class& num() const { return q_.get_num(); }
  const mpz_class& den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational abs() const { return Rational(mpq_class(::abs(q_))); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.q_ + b.q_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.q_ - b.q_));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.q_ * b.q_));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw math_error("rational division by zero");
    return Rational(mpq_class(a.q_ / b.q_));
  }

  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.q_ == b.q_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0   ? std::strong_ordering::less
           : c > 0 ? std::strong_ordering::greater
                   : std::strong_ordering::equal;
  }

  // "num" when the denominator is 1, otherwise "num/den".
  std::string str() const;
  double to_double() const { return q_.get_d(); }
  const mpq_class& mpq() const { return q_; }

 private:
  mpq_class q_;
};

Rational rat_arith(ArithOp op, const Rational& a, const Rational& b);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace qalpha

#endif  // QALPHA_RATIONAL_HPP
