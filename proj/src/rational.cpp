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

#include "qalpha/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

namespace qalpha {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Signed decimal integer -> mpz. Throws parse_error.
mpz_class parse_integer(std::string_view s, std::string_view whole) {
  bool neg = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    neg = s[0] == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw parse_error("invalid rational literal: '" + std::string(whole) +
                      "'");
  }
  mpz_class v(std::string(s), 10);
  return neg ? mpz_class(-v) : v;
}

mpz_class pow10(unsigned long e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, e);
  return p;
}

// "[sign]digits[.digits][(e|E)[sign]digits]" -> exact rational.
Rational parse_decimal(std::string_view s, std::string_view whole) {
  bool neg = false;
  std::string_view rest = s;
  if (!rest.empty() && (rest[0] == '+' || rest[0] == '-')) {
    neg = rest[0] == '-';
    rest.remove_prefix(1);
  }
  long exp10 = 0;
  if (auto epos = rest.find_first_of("eE"); epos != std::string_view::npos) {
    std::string_view es = rest.substr(epos + 1);
    bool eneg = false;
    if (!es.empty() && (es[0] == '+' || es[0] == '-')) {
      eneg = es[0] == '-';
      es.remove_prefix(1);
    }
    if (!all_digits(es) || es.size() > 9) {
      throw parse_error("invalid exponent in '" + std::string(whole) + "'");
    }
    exp10 = std::stol(std::string(es));
    if (eneg) exp10 = -exp10;
    rest = rest.substr(0, epos);
  }
  std::string_view int_part = rest;
  std::string_view frac_part;
  if (auto dot = rest.find('.'); dot != std::string_view::npos) {
    int_part = rest.substr(0, dot);
    frac_part = rest.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) {
    throw parse_error("invalid rational literal: '" + std::string(whole) +
                      "'");
  }
  if ((!int_part.empty() && !all_digits(int_part)) ||
      (!frac_part.empty() && !all_digits(frac_part))) {
    throw parse_error("invalid rational literal: '" + std::string(whole) +
                      "'");
  }
  mpz_class mantissa(0);
  if (!int_part.empty()) mantissa = mpz_class(std::string(int_part), 10);
  for (char c : frac_part) {
    mantissa = mantissa * 10 + (c - '0');
  }
  if (neg) mantissa = -mantissa;
  long shift = exp10 - static_cast<long>(frac_part.size());
  mpz_class num = mantissa, den = 1;
  if (shift >= 0) {
    num *= pow10(static_cast<unsigned long>(shift));
  } else {
    den = pow10(static_cast<unsigned long>(-shift));
  }
  return Rational(num, den);
}

}  // namespace

Rational::Rational(long n, long d) : q_(n, d) {
  if (d == 0) throw math_error("rational with zero denominator");
  q_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) : q_(n, d) {
  if (d == 0) throw math_error("rational with zero denominator");
  q_.canonicalize();
}

Rational Rational::from_string(std::string_view s) {
  if (s.empty()) throw parse_error("empty rational literal");
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_integer(s.substr(0, slash), s);
    std::string_view den_s = s.substr(slash + 1);
    if (!all_digits(den_s)) {
      throw parse_error("invalid denominator in '" + std::string(s) + "'");
    }
    mpz_class den(std::string(den_s), 10);
    if (den == 0) throw parse_error("zero denominator in '" + std::string(s) + "'");
    return Rational(num, den);
  }
  if (s.find_first_of(".eE") != std::string_view::npos) {
    return parse_decimal(s, s);
  }
  return Rational(parse_integer(s, s), mpz_class(1));
}

Rational Rational::from_double(double x) {
  if (!std::isfinite(x)) throw parse_error("non-finite real input");
  mpq_class q;
  mpq_set_d(q.get_mpq_t(), x);
  return Rational(q);
}

std::string Rational::str() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

Rational rat_arith(ArithOp op, const Rational& a, const Rational& b) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  throw std::logic_error("unreachable");
}

ArithOp arith_op_from_name(std::string_view name) {
  if (name == "add") return ArithOp::Add;
  if (name == "sub") return ArithOp::Sub;
  if (name == "mul") return ArithOp::Mul;
  if (name == "div") return ArithOp::Div;
  throw parse_error("unknown arithmetic op: '" + std::string(name) + "'");
}

std::string_view arith_op_name(ArithOp op) {
  switch (op) {
    case ArithOp::Add: return "add";
    case ArithOp::Sub: return "sub";
    case ArithOp::Mul: return "mul";
    case ArithOp::Div: return "div";
  }
  return "?";
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace qalpha
