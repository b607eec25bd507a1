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

#include "qalpha/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace qalpha {

namespace {

void trim(std::vector<Rational>& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

}  // namespace

RationalPoly::RationalPoly(std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
  trim(coeffs_);
}

RationalPoly::RationalPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim(coeffs_);
}

RationalPoly RationalPoly::constant(const Rational& c) {
  return RationalPoly(std::vector<Rational>{c});
}

RationalPoly RationalPoly::monomial(const Rational& c, std::size_t power) {
  if (c.is_zero()) return RationalPoly();
  std::vector<Rational> v(power + 1);
  v[power] = c;
  return RationalPoly(std::move(v));
}

RationalPoly RationalPoly::identity() {
  return RationalPoly(std::vector<Rational>{Rational(0), Rational(1)});
}

Rational RationalPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

const Rational& RationalPoly::leading() const {
  if (coeffs_.empty()) {
    static const Rational zero(0);
    return zero;
  }
  return coeffs_.back();
}

bool RationalPoly::is_monic() const {
  return !coeffs_.empty() && coeffs_.back() == Rational(1);
}

RationalPoly RationalPoly::operator-() const {
  std::vector<Rational> v;
  v.reserve(coeffs_.size());
  for (const auto& c : coeffs_) v.push_back(-c);
  return RationalPoly(std::move(v));
}

RationalPoly operator+(const RationalPoly& a, const RationalPoly& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
  return RationalPoly(std::move(v));
}

RationalPoly operator-(const RationalPoly& a, const RationalPoly& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
  return RationalPoly(std::move(v));
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() || b.is_zero()) return RationalPoly();
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return RationalPoly(std::move(v));
}

RationalPoly operator*(const Rational& c, const RationalPoly& a) {
  if (c.is_zero()) return RationalPoly();
  std::vector<Rational> v;
  v.reserve(a.coeffs_.size());
  for (const auto& x : a.coeffs_) v.push_back(c * x);
  return RationalPoly(std::move(v));
}

Rational RationalPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

RationalPoly RationalPoly::derivative() const {
  if (coeffs_.size() <= 1) return RationalPoly();
  std::vector<Rational> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    v[i - 1] = Rational(static_cast<long>(i)) * coeffs_[i];
  }
  return RationalPoly(std::move(v));
}

std::string RationalPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational c = coeff(static_cast<std::size_t>(i));
    if (c.is_zero()) continue;
    Rational a = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    bool unit = a == Rational(1);
    if (i == 0 || !unit) os << a.str();
    if (i > 0) {
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

RationalPoly poly_arith(ArithOp op, const RationalPoly& a,
                        const RationalPoly& b) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div:
      throw parse_error("polynomial division is div_rem, not an arith op");
  }
  throw std::logic_error("unreachable");
}

std::pair<RationalPoly, RationalPoly> div_rem(const RationalPoly& a,
                                              const RationalPoly& b) {
  if (b.is_zero()) throw math_error("polynomial division by zero");
  std::vector<Rational> rem(a.coeffs());
  const int db = b.degree();
  const Rational& lead = b.leading();
  if (a.degree() < db) return {RationalPoly(), a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db) + 1);
  for (int k = a.degree(); k >= db; --k) {
    const Rational c = rem[static_cast<std::size_t>(k)] / lead;
    if (!c.is_zero()) {
      quot[static_cast<std::size_t>(k - db)] = c;
      for (int i = 0; i <= db; ++i) {
        rem[static_cast<std::size_t>(k - db + i)] -=
            c * b.coeff(static_cast<std::size_t>(i));
      }
    }
    rem.resize(static_cast<std::size_t>(k));
  }
  return {RationalPoly(std::move(quot)), RationalPoly(std::move(rem))};
}

ExtGcdResult ext_gcd(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() && b.is_zero()) {
    throw math_error("gcd of two zero polynomials");
  }
  RationalPoly old_r = a, r = b;
  RationalPoly old_u = RationalPoly::constant(Rational(1)), u;
  RationalPoly old_v, v = RationalPoly::constant(Rational(1));
  while (!r.is_zero()) {
    auto [q, rem] = div_rem(old_r, r);
    old_r = std::exchange(r, std::move(rem));
    RationalPoly nu = old_u - q * u;
    old_u = std::exchange(u, std::move(nu));
    RationalPoly nv = old_v - q * v;
    old_v = std::exchange(v, std::move(nv));
  }
  const Rational inv_lead = Rational(1) / old_r.leading();
  return {inv_lead * old_r, inv_lead * old_u, inv_lead * old_v};
}

RationalPoly compose_mod(const RationalPoly& f, const RationalPoly& g,
                         const RationalPoly& m) {
  RationalPoly acc;
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
    acc = div_rem(acc * g + RationalPoly::constant(*it), m).second;
  }
  return acc;
}

std::ostream& operator<<(std::ostream& os, const RationalPoly& p) {
  return os << p.str();
}

}  // namespace qalpha
