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

#ifndef QALPHA_POLY_HPP
#define QALPHA_POLY_HPP

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "qalpha/rational.hpp"

namespace qalpha {

/// Polynomial over Q with coefficients stored in ascending power order
/// (coeffs[i] multiplies x^i). Canonical: no trailing zero coefficients,
/// the zero polynomial is the empty list.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coeffs);
  RationalPoly(std::initializer_list<long> coeffs);

  static RationalPoly constant(const Rational& c);
  static RationalPoly monomial(const Rational& c, std::size_t power);
  static RationalPoly identity();  // x

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  // Zero beyond the degree.
  Rational coeff(std::size_t i) const;
  const Rational& leading() const;
  bool is_monic() const;

  RationalPoly operator-() const;
  friend RationalPoly operator+(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator-(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const Rational& c, const RationalPoly& a);

  friend bool operator==(const RationalPoly& a, const RationalPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  Rational eval(const Rational& x) const;
  RationalPoly derivative() const;

  // Human-readable form like "x^4 - 10x^2 + 1" (for messages and logs).
  std::string str() const;

 private:
  std::vector<Rational> coeffs_;
};

RationalPoly poly_arith(ArithOp op, const RationalPoly& a,
                        const RationalPoly& b);

// a = quotient * b + remainder, deg(remainder) < deg(b). Throws math_error
// when b is zero.
std::pair<RationalPoly, RationalPoly> div_rem(const RationalPoly& a,
                                              const RationalPoly& b);

struct ExtGcdResult {
  RationalPoly g;  // gcd(a, b), monic when nonzero
  RationalPoly u;  // u*a + v*b = g
  RationalPoly v;
};

// Extended Euclidean algorithm with the gcd normalized monic so the Bezout
// pair is deterministic. Throws math_error when both inputs are zero.
ExtGcdResult ext_gcd(const RationalPoly& a, const RationalPoly& b);

// f(g(x)) mod m, by Horner over the quotient ring.
RationalPoly compose_mod(const RationalPoly& f, const RationalPoly& g,
                         const RationalPoly& m);

std::ostream& operator<<(std::ostream& os, const RationalPoly& p);

}  // namespace qalpha

#endif  // QALPHA_POLY_HPP
