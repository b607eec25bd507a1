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

#include "qalpha/precise.hpp"

#include <algorithm>
#include <complex>
#include <cstdio>
#include <utility>
#include <vector>

namespace qalpha {

MpReal::MpReal(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }

MpReal::MpReal(const MpReal& o) {
  mpfr_init2(v_, o.precision());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

MpReal::MpReal(MpReal&& o) noexcept {
  mpfr_init2(v_, o.precision());
  mpfr_swap(v_, o.v_);
}

MpReal& MpReal::operator=(const MpReal& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.precision());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

MpReal& MpReal::operator=(MpReal&& o) noexcept {
  if (this != &o) mpfr_swap(v_, o.v_);
  return *this;
}

MpReal::~MpReal() { mpfr_clear(v_); }

MpReal MpReal::from(double x, mpfr_prec_t prec) {
  MpReal r(prec);
  mpfr_set_d(r.v_, x, MPFR_RNDN);
  return r;
}

MpReal MpReal::from(const Rational& q, mpfr_prec_t prec) {
  MpReal r(prec);
  mpfr_set_q(r.v_, q.mpq().get_mpq_t(), MPFR_RNDN);
  return r;
}

namespace {
mpfr_prec_t join(const MpReal& a, const MpReal& b) {
  return std::max(a.precision(), b.precision());
}
}  // namespace

MpReal operator+(const MpReal& a, const MpReal& b) {
  MpReal r(join(a, b));
  mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

MpReal operator-(const MpReal& a, const MpReal& b) {
  MpReal r(join(a, b));
  mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

MpReal operator*(const MpReal& a, const MpReal& b) {
  MpReal r(join(a, b));
  mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

MpReal operator/(const MpReal& a, const MpReal& b) {
  MpReal r(join(a, b));
  mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

MpReal MpReal::operator-() const {
  MpReal r(precision());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

MpReal MpReal::abs() const {
  MpReal r(precision());
  mpfr_abs(r.v_, v_, MPFR_RNDN);
  return r;
}

MpReal MpReal::hypot(const MpReal& x, const MpReal& y) {
  MpReal r(join(x, y));
  mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}

MpReal MpReal::pow2(long e, mpfr_prec_t prec) {
  MpReal r(prec);
  mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
  return r;
}

std::string MpReal::str(int digits) const {
  char buf[512];
  mpfr_snprintf(buf, sizeof(buf), "%.*Rf", digits, v_);
  return buf;
}

MpComplex MpComplex::from(double r, double i, mpfr_prec_t prec) {
  return {MpReal::from(r, prec), MpReal::from(i, prec)};
}

MpComplex operator/(const MpComplex& a, const MpComplex& b) {
  MpReal den = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / den,
          (a.im * b.re - a.re * b.im) / den};
}

std::string MpComplex::str(int digits) const {
  std::string s = re.str(digits);
  s += im.sign() < 0 ? " - " : " + ";
  s += im.abs().str(digits);
  s += "i";
  return s;
}

MpComplex evaluate(const RationalPoly& p, const MpComplex& z) {
  const mpfr_prec_t prec = z.precision();
  MpComplex acc(prec);
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    acc = acc * z;
    acc.re = acc.re + MpReal::from(*it, prec);
  }
  return acc;
}

namespace {

// All roots of p in double precision (Durand-Kerner). Good enough as Newton
// seeds; the refinement below supplies the accuracy.
std::vector<std::complex<double>> durand_kerner(const RationalPoly& p) {
  const int n = p.degree();
  std::vector<std::complex<double>> c(static_cast<std::size_t>(n) + 1);
  const double lead = p.leading().to_double();
  for (int i = 0; i <= n; ++i) {
    c[static_cast<std::size_t>(i)] =
        p.coeff(static_cast<std::size_t>(i)).to_double() / lead;
  }
  auto eval = [&](std::complex<double> z) {
    std::complex<double> acc = 0;
    for (int i = n; i >= 0; --i) acc = acc * z + c[static_cast<std::size_t>(i)];
    return acc;
  };
  double radius = 1.0;
  for (int i = 0; i < n; ++i) {
    radius = std::max(radius, std::abs(c[static_cast<std::size_t>(i)]));
  }
  radius += 1.0;
  std::vector<std::complex<double>> z(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    // Spread over a circle, off-axis start to dodge symmetric stalls.
    double theta = 2.0 * 3.141592653589793 * (i + 0.25) / n + 0.1;
    z[static_cast<std::size_t>(i)] = std::polar(radius, theta);
  }
  for (int iter = 0; iter < 500; ++iter) {
    double shift = 0.0;
    for (int i = 0; i < n; ++i) {
      std::complex<double> denom = 1.0;
      for (int j = 0; j < n; ++j) {
        if (j != i) {
          denom *= z[static_cast<std::size_t>(i)] -
                   z[static_cast<std::size_t>(j)];
        }
      }
      if (denom == std::complex<double>(0.0)) continue;
      std::complex<double> delta = eval(z[static_cast<std::size_t>(i)]) / denom;
      z[static_cast<std::size_t>(i)] -= delta;
      shift = std::max(shift, std::abs(delta));
    }
    if (shift < 1e-13) break;
  }
  return z;
}

}  // namespace

MpComplex find_root(const RationalPoly& p,
                    const std::optional<MpComplex>& hint,
                    const RootSearchOptions& opts) {
  if (p.degree() < 1) throw math_error("root search needs degree >= 1");
  const mpfr_prec_t prec = opts.precision;
  const RationalPoly dp = p.derivative();

  MpReal tol(prec);
  mpfr_set_ui(tol.raw(), 10, MPFR_RNDN);
  mpfr_pow_si(tol.raw(), tol.raw(), -opts.tolerance_digits, MPFR_RNDN);

  std::vector<MpComplex> candidates;
  if (hint.has_value()) {
    MpComplex h(prec);
    mpfr_set(h.re.raw(), hint->re.raw(), MPFR_RNDN);
    mpfr_set(h.im.raw(), hint->im.raw(), MPFR_RNDN);
    candidates.push_back(std::move(h));
  } else {
    auto seeds = durand_kerner(p);
    std::sort(seeds.begin(), seeds.end(), [](auto a, auto b) {
      if (a.real() != b.real()) return a.real() > b.real();
      return a.imag() > b.imag();
    });
    if (opts.prefer_real) {
      std::stable_partition(seeds.begin(), seeds.end(), [](auto s) {
        return std::abs(s.imag()) < 1e-7 * (1.0 + std::abs(s.real()));
      });
    }
    for (auto s : seeds) {
      candidates.push_back(MpComplex::from(s.real(), s.imag(), prec));
    }
  }

  // Stop Newton once the step is at the bottom of the working precision.
  MpReal step_floor = MpReal::pow2(-static_cast<long>(prec) + 8, prec);

  for (MpComplex z : candidates) {
    bool stalled = false;
    for (int it = 0; it < opts.max_iterations; ++it) {
      MpComplex fz = evaluate(p, z);
      if (fz.is_zero()) break;
      MpComplex dz = evaluate(dp, z);
      if (dz.is_zero()) {
        stalled = true;
        break;
      }
      MpComplex delta = fz / dz;
      z = z - delta;
      if (delta.abs() <= step_floor * (MpReal::from(1.0, prec) + z.abs())) {
        break;
      }
    }
    if (stalled) continue;
    if (opts.prefer_real && !z.im.is_zero()) {
      MpReal snap = MpReal::pow2(-static_cast<long>(prec) / 2, prec);
      if (z.im.abs() <= snap * (MpReal::from(1.0, prec) + z.re.abs())) {
        z.im = MpReal(prec);
      }
    }
    if (evaluate(p, z).abs() < tol) return z;
  }
  throw math_error("root search did not converge below tolerance");
}

}  // namespace qalpha
