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

#ifndef QALPHA_PRECISE_HPP
#define QALPHA_PRECISE_HPP

#include <mpfr.h>

#include <optional>
#include <string>

#include "qalpha/poly.hpp"
#include "qalpha/rational.hpp"

namespace qalpha {

// 256 bits ~ 77 decimal digits, comfortably past the 60-digit floor the
// embedding oracle needs.
inline constexpr mpfr_prec_t kDefaultPrecision = 256;

/// Arbitrary-precision real number (MPFR, round-to-nearest). Value type.
class MpReal {
 public:
  explicit MpReal(mpfr_prec_t prec = kDefaultPrecision);
  MpReal(const MpReal& o);
  MpReal(MpReal&& o) noexcept;
  MpReal& operator=(const MpReal& o);
  MpReal& operator=(MpReal&& o) noexcept;
  ~MpReal();

  static MpReal from(double x, mpfr_prec_t prec = kDefaultPrecision);
  static MpReal from(const Rational& q, mpfr_prec_t prec = kDefaultPrecision);

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  friend MpReal operator+(const MpReal& a, const MpReal& b);
  friend MpReal operator-(const MpReal& a, const MpReal& b);
  friend MpReal operator*(const MpReal& a, const MpReal& b);
  friend MpReal operator/(const MpReal& a, const MpReal& b);
  MpReal operator-() const;

  MpReal abs() const;
  static MpReal hypot(const MpReal& x, const MpReal& y);
  // 2^e at this value's precision.
  static MpReal pow2(long e, mpfr_prec_t prec = kDefaultPrecision);

  friend bool operator<(const MpReal& a, const MpReal& b) {
    return mpfr_cmp(a.v_, b.v_) < 0;
  }
  friend bool operator<=(const MpReal& a, const MpReal& b) {
    return mpfr_cmp(a.v_, b.v_) <= 0;
  }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  // Fixed-point rendering with the given number of fractional digits.
  std::string str(int digits = 10) const;

  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

 private:
  mpfr_t v_;
};

/// Complex number over MpReal.
struct MpComplex {
  MpReal re, im;

  explicit MpComplex(mpfr_prec_t prec = kDefaultPrecision)
      : re(prec), im(prec) {}
  MpComplex(MpReal r, MpReal i) : re(std::move(r)), im(std::move(i)) {}

  static MpComplex from(double r, double i,
                        mpfr_prec_t prec = kDefaultPrecision);

  mpfr_prec_t precision() const { return re.precision(); }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  MpComplex conj() const { return {re, -im}; }
  MpReal abs() const { return MpReal::hypot(re, im); }

  friend MpComplex operator+(const MpComplex& a, const MpComplex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend MpComplex operator-(const MpComplex& a, const MpComplex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend MpComplex operator*(const MpComplex& a, const MpComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend MpComplex operator/(const MpComplex& a, const MpComplex& b);

  std::string str(int digits = 10) const;
};

// Horner evaluation of p at z, in z's working precision.
MpComplex evaluate(const RationalPoly& p, const MpComplex& z);

struct RootSearchOptions {
  mpfr_prec_t precision = kDefaultPrecision;
  // Accept when |p(root)| < 10^-tolerance_digits.
  int tolerance_digits = 50;
  // Prefer a real root (and snap a negligible imaginary part to zero).
  bool prefer_real = false;
  int max_iterations = 200;
};

// One root of p: Newton refinement from the hint when given, otherwise from
// a Durand-Kerner sweep in double precision. Deterministic candidate order:
// descending real part, then descending imaginary part. Throws math_error
// when no candidate converges below the tolerance.
MpComplex find_root(const RationalPoly& p,
                    const std::optional<MpComplex>& hint,
                    const RootSearchOptions& opts = {});

}  // namespace qalpha

#endif  // QALPHA_PRECISE_HPP
