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

#include "qalpha/quantize.hpp"

#include <functional>
#include <utility>

namespace qalpha {

Norm norm_from_name(std::string_view name) {
  if (name == "l2") return Norm::L2;
  if (name == "linf") return Norm::Linf;
  throw parse_error("unknown norm: '" + std::string(name) + "'");
}

QuantStrategy strategy_from_name(std::string_view s) {
  if (s == "dyadic") return QuantStrategy::Dyadic;
  if (s == "cf") return QuantStrategy::ContinuedFraction;
  throw parse_error("unknown quantizer: '" + std::string(s) + "'");
}

RealScalar RealScalar::from_string(std::string_view s) {
  const bool decimal = s.find_first_of(".eE") != std::string_view::npos;
  return RealScalar{Rational::from_string(s), !decimal};
}

RealScalar RealScalar::from_double(double x) {
  return RealScalar{Rational::from_double(x), false};
}

namespace {

// Round v to the grid 2^-k, ties away from zero.
Rational dyadic_round(const Rational& v, unsigned long k) {
  mpz_class scaled_num = v.num();
  mpz_mul_2exp(scaled_num.get_mpz_t(), scaled_num.get_mpz_t(), k);
  const int s = sgn(scaled_num);
  mpz_class a = abs(scaled_num);
  // floor((2a + den) / (2 den)) = round-half-up of a/den.
  mpz_class rounded = (2 * a + v.den()) / (2 * v.den());
  if (s < 0) rounded = -rounded;
  mpz_class grid = 1;
  mpz_mul_2exp(grid.get_mpz_t(), grid.get_mpz_t(), k);
  return Rational(rounded, grid);
}

// Smallest k >= 1 with 2^-k < eps (Linf) or m * 2^-2k < eps^2 (L2).
// Starting at 1 keeps exact dyadics like 0.5 on the grid for any epsilon.
unsigned long dyadic_exponent(const EpsilonConfig& cfg, std::size_t m) {
  unsigned long k = 1;
  if (cfg.norm == Norm::Linf) {
    mpz_class lhs = cfg.epsilon.num() * 2;  // eps.num * 2^k
    while (lhs <= cfg.epsilon.den()) {
      lhs *= 2;
      ++k;
    }
  } else {
    mpz_class lhs = cfg.epsilon.num() * cfg.epsilon.num() * 4;
    const mpz_class rhs =
        mpz_class(static_cast<long>(m)) * cfg.epsilon.den() *
        cfg.epsilon.den();
    while (lhs <= rhs) {
      lhs *= 4;
      ++k;
    }
  }
  return k;
}

// First continued-fraction convergent accepted by the error predicate.
// Terminates because the final convergent is the value itself.
Rational cf_approx(const Rational& v,
                   const std::function<bool(const Rational&)>& accept) {
  const int sign = v.sign();
  mpq_class x = ::abs(v.mpq());
  mpz_class p_prev = 1, q_prev = 0;
  mpz_class a;
  mpz_fdiv_q(a.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  mpz_class p_cur = a, q_cur = 1;
  mpq_class frac = x - mpq_class(a);
  while (true) {
    Rational cand(sign < 0 ? mpz_class(-p_cur) : p_cur, q_cur);
    if (accept(v - cand)) return cand;
    // frac == 0 means cand == v exactly, which accept() already took.
    x = 1 / frac;
    mpz_fdiv_q(a.get_mpz_t(), x.get_num().get_mpz_t(),
               x.get_den().get_mpz_t());
    frac = x - mpq_class(a);
    mpz_class p_next = a * p_cur + p_prev;
    mpz_class q_next = a * q_cur + q_prev;
    p_prev = std::move(p_cur);
    p_cur = std::move(p_next);
    q_prev = std::move(q_cur);
    q_cur = std::move(q_next);
  }
}

}  // namespace

Rational approximate(const Rational& value, const Rational& bound,
                     QuantStrategy strategy) {
  if (bound.sign() <= 0) throw parse_error("approximation bound must be > 0");
  if (strategy == QuantStrategy::Dyadic) {
    EpsilonConfig cfg;
    cfg.epsilon = bound;
    cfg.norm = Norm::Linf;
    return dyadic_round(value, dyadic_exponent(cfg, 1));
  }
  return cf_approx(value,
                   [&](const Rational& e) { return e.abs() < bound; });
}

std::vector<Rational> quantize(const RealVector& r,
                               const EpsilonConfig& cfg) {
  if (cfg.epsilon.sign() <= 0) throw parse_error("epsilon must be positive");
  const std::size_t m = r.size();
  std::vector<Rational> q(m);
  bool any_inexact = false;
  for (std::size_t i = 0; i < m; ++i) {
    if (r[i].exact) {
      q[i] = r[i].value;
    } else {
      any_inexact = true;
    }
  }
  if (!any_inexact) return q;

  if (cfg.strategy == QuantStrategy::Dyadic) {
    const unsigned long k = dyadic_exponent(cfg, m);
    for (std::size_t i = 0; i < m; ++i) {
      if (!r[i].exact) q[i] = dyadic_round(r[i].value, k);
    }
  } else {
    // Per-component target keeping the vector norm below epsilon:
    // |e| < eps for Linf, e^2 * m < eps^2 for L2.
    const Rational eps_sq = cfg.epsilon * cfg.epsilon;
    const Rational m_rat(static_cast<long>(m));
    auto accept = [&](const Rational& e) {
      if (cfg.norm == Norm::Linf) return e.abs() < cfg.epsilon;
      return e * e * m_rat < eps_sq;
    };
    for (std::size_t i = 0; i < m; ++i) {
      if (!r[i].exact) q[i] = cf_approx(r[i].value, accept);
    }
  }
  return q;
}

FieldElement eps_lift(const RealVector& r,
                      const std::shared_ptr<const NumberField>& field,
                      const EpsilonConfig& cfg) {
  if (r.size() != field->degree()) {
    throw parse_error("vector has " + std::to_string(r.size()) +
                      " components; field degree is " +
                      std::to_string(field->degree()));
  }
  return field->element(quantize(r, cfg));
}

FieldElement eps_arith(ArithOp op, const RealVector& r1, const RealVector& r2,
                       const std::shared_ptr<const NumberField>& field,
                       const EpsilonConfig& cfg) {
  const FieldElement q1 = eps_lift(r1, field, cfg);
  const FieldElement q2 = eps_lift(r2, field, cfg);
  return field_arith(op, q1, q2);
}

}  // namespace qalpha
