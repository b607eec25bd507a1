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

#include "qalpha/number_field.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>
#include <utility>

namespace qalpha {

namespace {

// ---------------------------------------------------------------------------
// Integer factorization helpers (divisor enumeration for the rational-root
// and quadratic-factor tests).
// ---------------------------------------------------------------------------

mpz_class pollard_rho(const mpz_class& n) {
  for (long c = 1;; ++c) {
    mpz_class x = 2, y = 2, d = 1;
    auto step = [&](const mpz_class& v) {
      return mpz_class((v * v + c) % n);
    };
    while (d == 1) {
      x = step(x);
      y = step(step(y));
      mpz_class diff = x - y;
      if (diff < 0) diff = -diff;
      if (diff == 0) break;  // cycle without factor; try next c
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != 1 && d != n) return d;
  }
}

void factorize(mpz_class n, std::map<mpz_class, int>& out) {
  if (n < 0) n = -n;
  if (n <= 1) return;
  for (long p = 2; p < 100000 && mpz_class(p) * p <= n;
       p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      ++out[mpz_class(p)];
      n /= p;
    }
  }
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 32) != 0) {
    ++out[n];
    return;
  }
  mpz_class d = pollard_rho(n);
  factorize(d, out);
  factorize(mpz_class(n / d), out);
}

// All positive divisors, ascending.
std::vector<mpz_class> divisors(const mpz_class& n) {
  std::map<mpz_class, int> fac;
  factorize(n, fac);
  std::vector<mpz_class> divs{1};
  for (const auto& [p, e] : fac) {
    const std::size_t base = divs.size();
    mpz_class pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

bool is_perfect_square(const mpz_class& n, mpz_class& root) {
  if (n < 0) return false;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  return root * root == n;
}

bool is_small_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Irreducibility machinery.
// ---------------------------------------------------------------------------

// lcm of coefficient denominators; D*p has integer coefficients.
mpz_class denominator_lcm(const RationalPoly& p) {
  mpz_class d = 1;
  for (const auto& c : p.coeffs()) {
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.den().get_mpz_t());
  }
  return d;
}

// Exhaustive rational-root test for a monic polynomial over Q. Returns a
// root when one exists. Candidates r/s: r | D*p(0), s | D, via the integer
// polynomial D*p.
std::optional<Rational> find_rational_root(const RationalPoly& p) {
  if (p.coeff(0).is_zero()) return Rational(0);
  const mpz_class d_lcm = denominator_lcm(p);
  const Rational c0 = p.coeff(0);
  mpz_class f0 = c0.num() * (d_lcm / c0.den());
  const auto rs = divisors(f0);
  const auto ss = divisors(d_lcm);
  for (const auto& s : ss) {
    for (const auto& r : rs) {
      for (int sign : {1, -1}) {
        Rational cand(sign > 0 ? r : mpz_class(-r), s);
        if (p.eval(cand).is_zero()) return cand;
      }
    }
  }
  return std::nullopt;
}

// Monic quadratic factor of a monic quartic over Q, when one exists. Works
// on the integer model q(y) = D^4 p(y/D), where any factorization into
// monic rational quadratics becomes one into monic integer quadratics.
std::optional<RationalPoly> find_quadratic_factor(const RationalPoly& p) {
  const mpz_class d_lcm = denominator_lcm(p);
  auto scaled = [&](std::size_t i, unsigned pow) {
    const Rational c = p.coeff(i);
    mpz_class scale;
    mpz_pow_ui(scale.get_mpz_t(), d_lcm.get_mpz_t(), pow);
    return mpz_class(c.num() * (scale / c.den()));
  };
  const mpz_class q3 = scaled(3, 1), q2 = scaled(2, 2), q1 = scaled(1, 3),
                  q0 = scaled(0, 4);
  for (const auto& cpos : divisors(q0)) {
    for (int sign : {1, -1}) {
      const mpz_class c = sign > 0 ? cpos : mpz_class(-cpos);
      const mpz_class cc = q0 / c;
      // B + B' = q3 and B*B' = q2 - c - cc.
      const mpz_class disc = q3 * q3 - 4 * (q2 - c - cc);
      mpz_class sq;
      if (!is_perfect_square(disc, sq)) continue;
      if ((q3 + sq) % 2 != 0) continue;
      const mpz_class b1 = (q3 + sq) / 2, b2 = (q3 - sq) / 2;
      for (const auto& [b, bb] : {std::pair(b1, b2), std::pair(b2, b1)}) {
        if (b * cc + bb * c == q1) {
          // y^2 + B y + C with y = D x.
          return RationalPoly(std::vector<Rational>{
              Rational(c, d_lcm * d_lcm), Rational(b, d_lcm), Rational(1)});
        }
      }
    }
  }
  return std::nullopt;
}

// --- GF(ell) polynomial arithmetic on small primes -------------------------

using ModPoly = std::vector<long>;  // ascending, reduced mod ell

void mp_trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

long mod_inv(long a, long ell) {
  long t = 0, nt = 1, r = ell, nr = a % ell;
  while (nr != 0) {
    long q = r / nr;
    t = std::exchange(nt, t - q * nt);
    r = std::exchange(nr, r - q * nr);
  }
  return ((t % ell) + ell) % ell;
}

ModPoly mp_mul(const ModPoly& a, const ModPoly& b, long ell) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = (r[i + j] + a[i] * b[j]) % ell;
    }
  }
  mp_trim(r);
  return r;
}

ModPoly mp_rem(ModPoly a, const ModPoly& m, long ell) {
  const long lead_inv = mod_inv(m.back(), ell);
  while (a.size() >= m.size()) {
    const long c = a.back() * lead_inv % ell;
    const std::size_t off = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) {
      a[off + i] = ((a[off + i] - c * m[i]) % ell + ell) % ell;
    }
    mp_trim(a);
  }
  return a;
}

ModPoly mp_powmod(const ModPoly& base, long exp, const ModPoly& m, long ell) {
  ModPoly result{1};
  ModPoly b = mp_rem(base, m, ell);
  while (exp > 0) {
    if (exp & 1) result = mp_rem(mp_mul(result, b, ell), m, ell);
    b = mp_rem(mp_mul(b, b, ell), m, ell);
    exp >>= 1;
  }
  return result;
}

ModPoly mp_gcd(ModPoly a, ModPoly b, long ell) {
  while (!b.empty()) {
    a = mp_rem(std::move(a), b, ell);
    std::swap(a, b);
  }
  return a;
}

// Rabin test: monic g of degree m is irreducible over GF(ell) iff
// x^(ell^m) == x (mod g) and gcd(x^(ell^(m/t)) - x, g) = 1 for every prime
// t dividing m.
bool mod_poly_irreducible(const ModPoly& g, long ell) {
  const std::size_t m = g.size() - 1;
  ModPoly x{0, 1};
  auto frobenius_power = [&](std::size_t times) {
    ModPoly t = mp_rem(x, g, ell);
    for (std::size_t i = 0; i < times; ++i) t = mp_powmod(t, ell, g, ell);
    return t;
  };
  ModPoly top = frobenius_power(m);
  ModPoly diff = top;
  diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
  diff[1] = ((diff[1] - 1) % ell + ell) % ell;
  mp_trim(diff);
  if (!diff.empty()) return false;
  std::size_t rest = m;
  for (std::size_t t = 2; t <= rest; ++t) {
    if (rest % t != 0) continue;
    while (rest % t == 0) rest /= t;
    ModPoly u = frobenius_power(m / t);
    ModPoly ud = u;
    ud.resize(std::max<std::size_t>(ud.size(), 2), 0);
    ud[1] = ((ud[1] - 1) % ell + ell) % ell;
    mp_trim(ud);
    ModPoly g1 = mp_gcd(g, ud, ell);
    if (g1.size() != 1) return false;
  }
  return true;
}

// Sufficiency check for degree >= 5: irreducible mod some small prime not
// dividing the scaled leading coefficient implies irreducible over Q.
bool irreducible_mod_some_prime(const RationalPoly& p) {
  const mpz_class d_lcm = denominator_lcm(p);
  static constexpr long kPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23,
                                     29, 31, 37, 41, 43, 47, 53, 59, 61,
                                     67, 71, 73, 79, 83, 89, 97};
  for (long ell : kPrimes) {
    if (d_lcm % ell == 0) continue;
    ModPoly f(p.coeffs().size());
    for (std::size_t i = 0; i < f.size(); ++i) {
      const Rational& c = p.coeffs()[i];
      mpz_class num_scaled = c.num() * (d_lcm / c.den());
      long r = static_cast<long>(mpz_class(num_scaled % ell).get_si());
      f[i] = ((r % ell) + ell) % ell;
    }
    mp_trim(f);
    if (f.size() != p.coeffs().size()) continue;  // degree dropped mod ell
    const long inv = mod_inv(f.back(), ell);
    for (auto& c : f) c = c * inv % ell;
    if (mod_poly_irreducible(f, ell)) return true;
  }
  return false;
}

RationalPoly poly_from_coeffs(const std::vector<Rational>& coeffs) {
  return RationalPoly(std::vector<Rational>(coeffs));
}

}  // namespace

// ---------------------------------------------------------------------------
// ConjugationSpec
// ---------------------------------------------------------------------------

ConjugationSpec ConjugationSpec::real_alpha() {
  ConjugationSpec s;
  s.kind_ = Kind::RealAlpha;
  return s;
}

ConjugationSpec ConjugationSpec::cyclotomic(unsigned prime) {
  ConjugationSpec s;
  s.kind_ = Kind::CyclotomicPrime;
  s.prime_ = prime;
  return s;
}

ConjugationSpec ConjugationSpec::explicit_map(
    std::vector<Rational> alpha_star) {
  ConjugationSpec s;
  s.kind_ = Kind::Explicit;
  s.alpha_star_ = std::move(alpha_star);
  return s;
}

// ---------------------------------------------------------------------------
// NumberField
// ---------------------------------------------------------------------------

std::shared_ptr<const NumberField> NumberField::create(
    RationalPoly min_poly, ConjugationSpec conjugation,
    const FieldOptions& opts) {
  if (!min_poly.is_monic()) {
    throw validation_error("minimal polynomial must be monic: " +
                           min_poly.str());
  }
  if (min_poly.degree() < 2) {
    throw validation_error("minimal polynomial must have degree >= 2");
  }
  const auto m = static_cast<std::size_t>(min_poly.degree());

  bool verified = false;
  if (auto root = find_rational_root(min_poly)) {
    throw validation_error("reducible: factor (x - " + root->str() +
                           ") divides " + min_poly.str());
  }
  if (m <= 4) {
    if (m == 4) {
      if (auto q = find_quadratic_factor(min_poly)) {
        throw validation_error("reducible: factor (" + q->str() +
                               ") divides " + min_poly.str());
      }
    }
    verified = true;  // no rational root settles degrees 2 and 3
  } else {
    verified = irreducible_mod_some_prime(min_poly);
    if (!verified && !opts.allow_unverified) {
      throw validation_error(
          "irreducibility inconclusive for " + min_poly.str() +
          "; pass allow_unverified to accept the polynomial as-is");
    }
  }

  // Conjugation consistency.
  RationalPoly alpha_star;
  switch (conjugation.kind()) {
    case ConjugationSpec::Kind::RealAlpha:
      alpha_star = RationalPoly::identity();
      break;
    case ConjugationSpec::Kind::CyclotomicPrime: {
      const unsigned p = conjugation.prime();
      if (p <= 2 || !is_small_prime(p)) {
        throw validation_error("cyclotomic conjugation needs an odd prime");
      }
      if (m != p - 1) {
        throw validation_error(
            "cyclotomic-" + std::to_string(p) +
            " conjugation needs degree p-1 = " + std::to_string(p - 1));
      }
      std::vector<Rational> cyc(m + 1, Rational(1));
      if (!(min_poly == RationalPoly(std::move(cyc)))) {
        throw validation_error(
            "cyclotomic conjugation needs the minimal polynomial 1 + x + "
            "... + x^(p-1)");
      }
      // alpha* = alpha^(p-1) = -(1 + alpha + ... + alpha^(p-2)).
      std::vector<Rational> a(m, Rational(-1));
      alpha_star = RationalPoly(std::move(a));
      break;
    }
    case ConjugationSpec::Kind::Explicit: {
      if (conjugation.alpha_star().size() != m) {
        throw validation_error("explicit conjugation needs exactly m = " +
                               std::to_string(m) + " coefficients");
      }
      alpha_star = poly_from_coeffs(conjugation.alpha_star());
      if (!(compose_mod(alpha_star, alpha_star, min_poly) ==
            RationalPoly::identity())) {
        throw validation_error(
            "explicit conjugation is not an involution: conj(conj(alpha)) "
            "!= alpha");
      }
      if (!compose_mod(min_poly, alpha_star, min_poly).is_zero()) {
        throw validation_error(
            "explicit conjugation does not map alpha to a root of the "
            "minimal polynomial");
      }
      break;
    }
  }

  auto field = std::shared_ptr<NumberField>(new NumberField());
  field->min_poly_ = std::move(min_poly);
  field->degree_ = m;
  field->conjugation_ = std::move(conjugation);
  field->verified_ = verified;
  field->precision_ = opts.precision;

  field->conj_powers_.reserve(m);
  RationalPoly power = RationalPoly::constant(Rational(1));
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Rational> row(m);
    for (std::size_t j = 0; j < m; ++j) row[j] = power.coeff(j);
    field->conj_powers_.push_back(std::move(row));
    if (i + 1 < m) {
      power = div_rem(power * alpha_star, field->min_poly_).second;
    }
  }

  if (opts.compute_numeric_root) {
    RootSearchOptions ropts;
    ropts.precision = opts.precision;
    ropts.tolerance_digits = opts.root_tolerance_digits;
    ropts.prefer_real =
        field->conjugation_.kind() == ConjugationSpec::Kind::RealAlpha;
    field->numeric_root_ = find_root(field->min_poly_, opts.root_hint, ropts);
  }
  return field;
}

const MpComplex& NumberField::numeric_root() const {
  if (!numeric_root_.has_value()) {
    throw math_error("field has no numeric root");
  }
  return *numeric_root_;
}

bool NumberField::same_field(const NumberField& other) const {
  if (this == &other) return true;
  return min_poly_ == other.min_poly_ && conjugation_ == other.conjugation_;
}

FieldElement NumberField::element(std::vector<Rational> coeffs) const {
  return FieldElement(shared_from_this(), std::move(coeffs));
}

FieldElement NumberField::element_from_longs(
    const std::vector<long>& coeffs) const {
  std::vector<Rational> v;
  v.reserve(coeffs.size());
  for (long c : coeffs) v.emplace_back(c);
  return element(std::move(v));
}

FieldElement NumberField::element_from_poly(const RationalPoly& poly) const {
  const RationalPoly r = div_rem(poly, min_poly_).second;
  std::vector<Rational> v(degree_);
  for (std::size_t i = 0; i < degree_; ++i) v[i] = r.coeff(i);
  return element(std::move(v));
}

FieldElement NumberField::zero() const {
  return element(std::vector<Rational>(degree_));
}

FieldElement NumberField::one() const {
  std::vector<Rational> v(degree_);
  v[0] = Rational(1);
  return element(std::move(v));
}

FieldElement NumberField::generator() const {
  std::vector<Rational> v(degree_);
  v[1] = Rational(1);
  return element(std::move(v));
}

// ---------------------------------------------------------------------------
// FieldElement
// ---------------------------------------------------------------------------

FieldElement::FieldElement(std::shared_ptr<const NumberField> field,
                           std::vector<Rational> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != field_->degree()) {
    throw parse_error("element needs exactly " +
                      std::to_string(field_->degree()) +
                      " coefficients, got " + std::to_string(coeffs_.size()));
  }
}

bool FieldElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return c.is_zero(); });
}

namespace {

void require_same_field(const FieldElement& a, const FieldElement& b) {
  if (a.field_ptr() == b.field_ptr()) return;
  if (!a.field().same_field(b.field())) {
    throw parse_error("elements belong to different fields");
  }
}

}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  std::vector<Rational> v(a.coeffs().size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = a.coeffs()[i] + b.coeffs()[i];
  }
  return FieldElement(a.field_ptr(), std::move(v));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  std::vector<Rational> v(a.coeffs().size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = a.coeffs()[i] - b.coeffs()[i];
  }
  return FieldElement(a.field_ptr(), std::move(v));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  const RationalPoly prod = poly_from_coeffs(a.coeffs()) *
                            poly_from_coeffs(b.coeffs());
  return a.field().element_from_poly(prod);
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return a * inverse(b);
}

FieldElement FieldElement::operator-() const {
  std::vector<Rational> v(coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = -coeffs_[i];
  return FieldElement(field_, std::move(v));
}

bool FieldElement::operator==(const FieldElement& o) const {
  return field_->same_field(*o.field_) && coeffs_ == o.coeffs_;
}

std::string FieldElement::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ", ";
    os << coeffs_[i].str();
  }
  os << "]";
  return os.str();
}

FieldElement field_arith(ArithOp op, const FieldElement& a,
                         const FieldElement& b) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  throw std::logic_error("unreachable");
}

FieldElement inverse(const FieldElement& a) {
  if (a.is_zero()) throw math_error("division by zero element");
  const auto bez = ext_gcd(poly_from_coeffs(a.coeffs()), a.field().min_poly());
  if (bez.g.degree() != 0) {
    // Reachable only on an unverified (reducible) modulus.
    throw math_error("element is not invertible modulo " +
                     a.field().min_poly().str());
  }
  return a.field().element_from_poly(bez.u);
}

FieldElement conjugate(const FieldElement& a) {
  const auto& powers = a.field().conjugate_powers();
  const std::size_t m = a.field().degree();
  std::vector<Rational> v(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Rational& c = a.coeffs()[i];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < m; ++j) {
      v[j] += c * powers[i][j];
    }
  }
  return FieldElement(a.field_ptr(), std::move(v));
}

FieldElement inner_product(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return a * conjugate(b);
}

MpComplex embed(const FieldElement& a) {
  const MpComplex& root = a.field().numeric_root();
  return evaluate(poly_from_coeffs(a.coeffs()), root);
}

std::ostream& operator<<(std::ostream& os, const FieldElement& e) {
  return os << e.str();
}

}  // namespace qalpha
