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

#ifndef QALPHA_QUANTIZE_HPP
#define QALPHA_QUANTIZE_HPP

#include <string_view>
#include <vector>

#include "qalpha/number_field.hpp"
#include "qalpha/rational.hpp"

namespace qalpha {

enum class Norm { L2, Linf };
enum class QuantStrategy { Dyadic, ContinuedFraction };

Norm norm_from_name(std::string_view name);            // "l2" | "linf"
QuantStrategy strategy_from_name(std::string_view s);  // "dyadic" | "cf"

struct EpsilonConfig {
  Rational epsilon = Rational(1, 1000000000);  // 1e-9
  Norm norm = Norm::Linf;
  QuantStrategy strategy = QuantStrategy::Dyadic;
};

/// One component of a real vector. Every machine real is a rational; the
/// flag records whether the caller supplied it as an exact rational (those
/// pass through quantization unchanged) or as a decimal/floating value.
struct RealScalar {
  Rational value;
  bool exact = false;

  // "2/7" and "-3" are exact; "0.25" and "1e-3" are decimal approximations.
  static RealScalar from_string(std::string_view s);
  // Exact dyadic value of the double, marked inexact. Throws on non-finite.
  static RealScalar from_double(double x);
};

using RealVector = std::vector<RealScalar>;

// Deterministic rational approximation with ||r - q|| < epsilon in the
// configured norm. Exact components pass through unchanged. Dyadic: round
// every component to the grid 2^-k for the smallest k >= 1 with
// 2^-k < eps_comp (eps_comp = eps for Linf, eps/sqrt(m) for L2, compared
// exactly via squares). Continued fractions: first convergent within
// eps_comp, per component.
std::vector<Rational> quantize(const RealVector& r, const EpsilonConfig& cfg);

// Smallest-k dyadic / first CF convergent for a single value; building
// block of quantize, exposed for reuse and testing.
Rational approximate(const Rational& value, const Rational& bound,
                     QuantStrategy strategy);

// Quantize both vectors, lift into the field, apply the operation.
// Division by a vector that quantizes to the zero element reports
// division-by-zero (an input inside an epsilon-range of 0 counts as 0).
FieldElement eps_arith(ArithOp op, const RealVector& r1, const RealVector& r2,
                       const std::shared_ptr<const NumberField>& field,
                       const EpsilonConfig& cfg);

// Quantize and lift a single vector.
FieldElement eps_lift(const RealVector& r,
                      const std::shared_ptr<const NumberField>& field,
                      const EpsilonConfig& cfg);

}  // namespace qalpha

#endif  // QALPHA_QUANTIZE_HPP
