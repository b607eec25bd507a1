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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "qalpha/poly.hpp"
#include "qalpha/precise.hpp"
#include "test_support.hpp"

using namespace qalpha;

namespace {

// Independent schoolbook convolution over plain longs; the oracle for
// polynomial products with small integer coefficients.
std::vector<long> conv_oracle(const std::vector<long>& a,
                              const std::vector<long>& b) {
  std::vector<long> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

RationalPoly from_longs(const std::vector<long>& v) {
  std::vector<Rational> c;
  c.reserve(v.size());
  for (long x : v) c.emplace_back(x);
  return RationalPoly(std::move(c));
}

}  // namespace

TEST_CASE("products and sums") {
  const RationalPoly x_plus_1{1, 1};
  const RationalPoly x_minus_1{-1, 1};
  CHECK(x_plus_1 * x_minus_1 == RationalPoly{-1, 0, 1});
  CHECK(RationalPoly{0, 0, 1} + RationalPoly{0, 0, -1} == RationalPoly());

  // The worked-example pair; expected value computed by conv_oracle.
  const std::vector<long> a{1, 1, 1, 1}, b{1, 1, -1, -1};
  const std::vector<long> expect = conv_oracle(a, b);
  CHECK(expect == std::vector<long>{1, 2, 1, 0, -1, -2, -1});
  CHECK(from_longs(a) * from_longs(b) == from_longs(expect));
}

TEST_CASE("op dispatch") {
  const RationalPoly a{1, 2}, b{0, 1};
  CHECK(poly_arith(ArithOp::Add, a, b) == a + b);
  CHECK(poly_arith(ArithOp::Sub, a, b) == a - b);
  CHECK(poly_arith(ArithOp::Mul, a, b) == a * b);
  CHECK_THROWS_AS(poly_arith(ArithOp::Div, a, b), parse_error);
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    const RationalPoly a = test::random_poly(rng, 6);
    const RationalPoly b = test::random_poly(rng, 6);
    const RationalPoly c = test::random_poly(rng, 6);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("division with remainder") {
  const RationalPoly p1{1, 0, -10, 0, 1};
  auto [q, r] = div_rem(RationalPoly{0, 0, 0, 0, 1}, p1);
  CHECK(q == RationalPoly{1});
  CHECK(r == RationalPoly{-1, 0, 10});

  auto [q2, r2] = div_rem(RationalPoly{-1, 0, 1}, RationalPoly{-1, 1});
  CHECK(q2 == RationalPoly{1, 1});
  CHECK(r2.is_zero());

  auto [q3, r3] = div_rem(RationalPoly{0, 1}, RationalPoly{1, 0, 1});
  CHECK(q3.is_zero());
  CHECK(r3 == RationalPoly{0, 1});

  CHECK_THROWS_AS(div_rem(RationalPoly{1}, RationalPoly()), math_error);
}

TEST_CASE("div_rem round-trip on random pairs") {
  std::mt19937_64 rng(4);
  int done = 0;
  while (done < 1000) {
    const RationalPoly a = test::random_poly(rng, 8);
    const RationalPoly b = test::random_poly(rng, 8);
    if (b.is_zero()) continue;
    auto [q, r] = div_rem(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
    ++done;
  }
}

TEST_CASE("extended gcd") {
  const RationalPoly x{0, 1};
  const RationalPoly x2_plus_1{1, 0, 1};
  auto res = ext_gcd(x, x2_plus_1);
  CHECK(res.g == RationalPoly{1});
  CHECK(res.u == RationalPoly{0, -1});
  CHECK(res.v == RationalPoly{1});
  CHECK(res.u * x + res.v * x2_plus_1 == RationalPoly{1});

  // Equal inputs: gcd is the input made monic.
  const RationalPoly xm1{-1, 1};
  auto eq = ext_gcd(xm1, xm1);
  CHECK(eq.g == xm1);
  CHECK(eq.u * xm1 + eq.v * xm1 == xm1);

  // Coprime to the quartic modulus: u is the inverse mod b.
  const RationalPoly a{1, 1, 1, 1};
  const RationalPoly p1{1, 0, -10, 0, 1};
  auto inv = ext_gcd(a, p1);
  CHECK(inv.g == RationalPoly{1});
  CHECK(div_rem(inv.u * a, p1).second == RationalPoly{1});

  CHECK_THROWS_AS(ext_gcd(RationalPoly(), RationalPoly()), math_error);
}

TEST_CASE("bezout identity on random pairs") {
  std::mt19937_64 rng(5);
  int done = 0;
  while (done < 1000) {
    const RationalPoly a = test::random_poly(rng, 6);
    const RationalPoly b = test::random_poly(rng, 6);
    if (a.is_zero() && b.is_zero()) continue;
    auto res = ext_gcd(a, b);
    CHECK(res.u * a + res.v * b == res.g);
    if (!res.g.is_zero()) CHECK(res.g.is_monic());
    CHECK(div_rem(a, res.g).second.is_zero());
    CHECK(div_rem(b, res.g).second.is_zero());
    ++done;
  }
}

TEST_CASE("high-precision evaluation") {
  const MpComplex i = MpComplex::from(0.0, 1.0);
  const MpComplex at_i = evaluate(RationalPoly{1, 0, 1}, i);
  CHECK(at_i.abs().to_double() < 1e-70);

  // alpha1 = sqrt(2) + sqrt(3) is a root of x^4 - 10x^2 + 1.
  MpReal two = MpReal::from(2.0), three = MpReal::from(3.0);
  MpReal alpha(kDefaultPrecision);
  mpfr_sqrt(alpha.raw(), two.raw(), MPFR_RNDN);
  MpReal s3(kDefaultPrecision);
  mpfr_sqrt(s3.raw(), three.raw(), MPFR_RNDN);
  alpha = alpha + s3;
  CHECK(alpha.str(10) == "3.1462643699");
  const MpComplex at_alpha =
      evaluate(RationalPoly{1, 0, -10, 0, 1}, MpComplex(alpha, MpReal()));
  CHECK(at_alpha.abs().to_double() < 1e-70);

  const MpComplex c = evaluate(RationalPoly{5}, MpComplex::from(2.5, -7.0));
  CHECK(c.re.to_double() == 5.0);
  CHECK(c.im.is_zero());
}

TEST_CASE("composition mod a polynomial") {
  // A(x) = -1 - x is an involution mod 1 + x + x^2.
  const RationalPoly a{-1, -1};
  const RationalPoly m{1, 1, 1};
  CHECK(compose_mod(a, a, m) == RationalPoly::identity());
}
