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

#ifndef QALPHA_NUMBER_FIELD_HPP
#define QALPHA_NUMBER_FIELD_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qalpha/poly.hpp"
#include "qalpha/precise.hpp"
#include "qalpha/rational.hpp"

namespace qalpha {

/// How complex conjugation acts on the generator alpha.
class ConjugationSpec {
 public:
  enum class Kind { RealAlpha, CyclotomicPrime, Explicit };

  static ConjugationSpec real_alpha();
  // alpha = exp(2*pi*i/p) for an odd prime p; requires the minimal
  // polynomial 1 + x + ... + x^(p-1).
  static ConjugationSpec cyclotomic(unsigned prime);
  // alpha* given directly as a polynomial in alpha (ascending, length m).
  static ConjugationSpec explicit_map(std::vector<Rational> alpha_star);

  Kind kind() const { return kind_; }
  unsigned prime() const { return prime_; }
  const std::vector<Rational>& alpha_star() const { return alpha_star_; }

  bool operator==(const ConjugationSpec&) const = default;

 private:
  ConjugationSpec() = default;
  Kind kind_ = Kind::RealAlpha;
  unsigned prime_ = 0;
  std::vector<Rational> alpha_star_;
};

struct FieldOptions {
  // Accept the field even when irreducibility cannot be proven (degree >= 5
  // and the mod-prime test is inconclusive); recorded on the field.
  bool allow_unverified = false;
  bool compute_numeric_root = true;
  std::optional<MpComplex> root_hint;
  mpfr_prec_t precision = kDefaultPrecision;
  int root_tolerance_digits = 50;
};

class FieldElement;

/// The field Q(alpha) = Q[x]/(p(x)) for a validated monic minimal
/// polynomial p of degree m >= 2. Immutable after construction; share via
/// shared_ptr. Elements are vectors of m rationals in the power basis
/// 1, alpha, ..., alpha^(m-1).
class NumberField : public std::enable_shared_from_this<NumberField> {
 public:
  // Validates and builds the field:
  //  - monic, degree >= 2;
  //  - irreducibility: exhaustive rational-root test always; exact monic
  //    quadratic-factor search for degree 4; modular sufficiency test for
  //    degree >= 5 (inconclusive fails unless opts.allow_unverified);
  //  - conjugation spec consistency (see ConjugationSpec);
  //  - numeric root at opts.precision unless disabled.
  // Throws validation_error / math_error.
  static std::shared_ptr<const NumberField> create(
      RationalPoly min_poly, ConjugationSpec conjugation,
      const FieldOptions& opts = {});

  const RationalPoly& min_poly() const { return min_poly_; }
  std::size_t degree() const { return degree_; }
  const ConjugationSpec& conjugation() const { return conjugation_; }
  // False only when construction used allow_unverified on an inconclusive
  // irreducibility check.
  bool irreducibility_verified() const { return verified_; }
  mpfr_prec_t precision() const { return precision_; }

  bool has_numeric_root() const { return numeric_root_.has_value(); }
  // Throws math_error when the root was not computed.
  const MpComplex& numeric_root() const;

  // Coefficient rows of (alpha*)^i mod p for i = 0..m-1; conjugation of an
  // element is the linear combination of these rows.
  const std::vector<std::vector<Rational>>& conjugate_powers() const {
    return conj_powers_;
  }

  bool same_field(const NumberField& other) const;

  FieldElement element(std::vector<Rational> coeffs) const;
  FieldElement element_from_longs(const std::vector<long>& coeffs) const;
  // Reduce an arbitrary polynomial mod p into an element.
  FieldElement element_from_poly(const RationalPoly& poly) const;
  FieldElement zero() const;
  FieldElement one() const;
  FieldElement generator() const;  // alpha

 private:
  NumberField() = default;

  RationalPoly min_poly_;
  std::size_t degree_ = 0;
  ConjugationSpec conjugation_ = ConjugationSpec::real_alpha();
  bool verified_ = false;
  mpfr_prec_t precision_ = kDefaultPrecision;
  std::vector<std::vector<Rational>> conj_powers_;
  std::optional<MpComplex> numeric_root_;
};

/// An element q1 + q2*alpha + ... + qm*alpha^(m-1), held as its m rational
/// coefficients plus a handle to the field. Immutable value.
class FieldElement {
 public:
  FieldElement(std::shared_ptr<const NumberField> field,
               std::vector<Rational> coeffs);

  const NumberField& field() const { return *field_; }
  const std::shared_ptr<const NumberField>& field_ptr() const {
    return field_;
  }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  // Multiplies by inverse(b); throws math_error when b is zero.
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement operator-() const;

  bool operator==(const FieldElement& o) const;

  // "[q1, q2, ..., qm]" with each qi as Rational::str().
  std::string str() const;

 private:
  std::shared_ptr<const NumberField> field_;
  std::vector<Rational> coeffs_;
};

FieldElement field_arith(ArithOp op, const FieldElement& a,
                         const FieldElement& b);

// Bezout inverse: u from ext_gcd(a's polynomial, p) reduced mod p. Exact;
// a * inverse(a) is the identity. Throws math_error for the zero element.
FieldElement inverse(const FieldElement& a);

// Applies alpha -> alpha* coefficient-linearly. An exact involution.
FieldElement conjugate(const FieldElement& a);

// <a, b> = a * conjugate(b). A field element, not a scalar.
FieldElement inner_product(const FieldElement& a, const FieldElement& b);

// Image of the element under alpha -> numeric_root; the verification
// oracle. Throws math_error when the field has no numeric root.
MpComplex embed(const FieldElement& a);

std::ostream& operator<<(std::ostream& os, const FieldElement& e);

}  // namespace qalpha

#endif  // QALPHA_NUMBER_FIELD_HPP
