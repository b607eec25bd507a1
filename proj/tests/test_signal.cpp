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

#include "qalpha/signal.hpp"
#include "test_support.hpp"

using namespace qalpha;
using test::GaussianRational;

namespace {

// Exact complex-rational convolution with a conjugated second signal:
// out(n) = sum_k z1(k) * conj(z2(n - k)). The independent oracle for the
// m = 2 field.
std::vector<GaussianRational> complex_conv_oracle(
    const std::vector<GaussianRational>& z1,
    const std::vector<GaussianRational>& z2) {
  std::vector<GaussianRational> out(z1.size() + z2.size() - 1,
                                    GaussianRational{Rational(0),
                                                     Rational(0)});
  for (std::size_t i = 0; i < z1.size(); ++i) {
    for (std::size_t j = 0; j < z2.size(); ++j) {
      out[i + j] = out[i + j] + z1[i] * z2[j].conj();
    }
  }
  return out;
}

std::vector<GaussianRational> to_gauss_seq(const VectorSignal& s) {
  std::vector<GaussianRational> out;
  out.reserve(s.length());
  for (const auto& e : s.elements()) out.push_back(test::to_gauss(e));
  return out;
}

VectorSignal gauss_signal(const std::shared_ptr<const NumberField>& f,
                          std::initializer_list<std::pair<long, long>> vals,
                          long long start = 0) {
  std::vector<FieldElement> e;
  for (const auto& [re, im] : vals) e.push_back(f->element_from_longs({re, im}));
  return VectorSignal(start, std::move(e));
}

}  // namespace

TEST_CASE("signal inner products") {
  auto f = test::field_sqrt23();
  std::mt19937_64 rng(15);

  SUBCASE("length-1 signals reduce to the vector inner product") {
    for (int i = 0; i < 20; ++i) {
      const FieldElement a = test::random_element(rng, f);
      const FieldElement b = test::random_element(rng, f);
      const VectorSignal s1(0, {a}), s2(0, {b});
      CHECK(signal_inner(s1, s2) == inner_product(a, b));
    }
  }

  SUBCASE("zero annihilates") {
    const VectorSignal s = test::random_signal(rng, f, 5);
    CHECK(signal_inner(s, VectorSignal::zero(f, 0, 5)).is_zero());
  }

  SUBCASE("misaligned supports are padded with zeros") {
    const VectorSignal s1(0, {f->one(), f->generator()});
    const VectorSignal s2(1, {f->one()});
    // Only index 1 overlaps: <alpha, 1> = alpha.
    CHECK(signal_inner(s1, s2) == f->generator());
  }

  SUBCASE("matches the exact complex oracle at m = 2") {
    auto g = test::field_gauss();
    for (int i = 0; i < 50; ++i) {
      const VectorSignal s1 = test::random_signal(rng, g, 6);
      const VectorSignal s2 = test::random_signal(rng, g, 6);
      GaussianRational expect{Rational(0), Rational(0)};
      for (std::size_t l = 0; l < 6; ++l) {
        expect = expect + to_gauss_seq(s1)[l] * to_gauss_seq(s2)[l].conj();
      }
      CHECK(test::to_gauss(signal_inner(s1, s2)) == expect);
    }
  }

  SUBCASE("definiteness at zero") {
    for (auto& fld : {f, test::field_cyc5(), test::field_gauss()}) {
      for (int i = 0; i < 30; ++i) {
        VectorSignal s = test::random_signal(rng, fld, 4);
        if (s.is_zero()) continue;
        CHECK_FALSE(signal_inner(s, s).is_zero());
      }
      CHECK(signal_inner(VectorSignal::zero(fld, 0, 4),
                         VectorSignal::zero(fld, 0, 4))
                .is_zero());
    }
  }

  SUBCASE("embedding maps the inner product to sum of z1 * conj(z2)") {
    for (auto& fld : {f, test::field_cyc5(), test::field_gauss()}) {
      for (int i = 0; i < 20; ++i) {
        const VectorSignal s1 = test::random_signal(rng, fld, 5);
        const VectorSignal s2 = test::random_signal(rng, fld, 5);
        MpComplex expect(fld->precision());
        for (std::size_t l = 0; l < 5; ++l) {
          expect = expect +
                   embed(s1.elements()[l]) * embed(s2.elements()[l]).conj();
        }
        const MpComplex got = embed(signal_inner(s1, s2));
        CHECK((got - expect).abs().to_double() <= 1e-8);
      }
    }
  }

  SUBCASE("field mismatch is rejected") {
    const VectorSignal s1(0, {f->one()});
    auto g = test::field_cyc5();
    const VectorSignal s2(0, {g->one()});
    CHECK_THROWS_AS(signal_inner(s1, s2), parse_error);
  }
}

TEST_CASE("convolution") {
  std::mt19937_64 rng(16);

  SUBCASE("unit impulse on the right is the identity") {
    for (auto& f :
         {test::field_sqrt23(), test::field_cyc5(), test::field_gauss()}) {
      const VectorSignal s = test::random_signal(rng, f, 5, 2);
      const VectorSignal out = convolve(s, VectorSignal::impulse(f));
      CHECK(out.start() == s.start());
      CHECK(out == s);
    }
  }

  SUBCASE("complex cross-check: (1, i) * (1, 1)") {
    auto g = test::field_gauss();
    const VectorSignal s1 = gauss_signal(g, {{1, 0}, {0, 1}});
    const VectorSignal s2 = gauss_signal(g, {{1, 0}, {1, 0}});
    const VectorSignal out = convolve(s1, s2);
    CHECK(out == gauss_signal(g, {{1, 0}, {1, 1}, {0, 1}}));
  }

  SUBCASE("random signals match the exact complex oracle") {
    auto g = test::field_gauss();
    for (int i = 0; i < 50; ++i) {
      const VectorSignal s1 = test::random_signal(rng, g, 5);
      const VectorSignal s2 = test::random_signal(rng, g, 7);
      const VectorSignal out = convolve(s1, s2);
      const auto expect = complex_conv_oracle(to_gauss_seq(s1),
                                              to_gauss_seq(s2));
      REQUIRE(out.length() == expect.size());
      for (std::size_t n = 0; n < expect.size(); ++n) {
        CHECK(test::to_gauss(out.elements()[n]) == expect[n]);
      }
    }
  }

  SUBCASE("zero input gives a zero signal of full length") {
    auto f = test::field_sqrt23();
    const VectorSignal z = VectorSignal::zero(f, 0, 3);
    const VectorSignal s = test::random_signal(rng, f, 4);
    const VectorSignal out = convolve(z, s);
    CHECK(out.length() == 6);
    CHECK(out.is_zero());
  }

  SUBCASE("support offsets add") {
    auto f = test::field_sqrt23();
    const VectorSignal s1 = test::random_signal(rng, f, 3, -2);
    const VectorSignal s2 = test::random_signal(rng, f, 4, 5);
    CHECK(convolve(s1, s2).start() == 3);
  }

  SUBCASE("linear in the first argument") {
    auto f = test::field_cyc5();
    for (int i = 0; i < 20; ++i) {
      const FieldElement a = test::random_element(rng, f);
      const VectorSignal s1 = test::random_signal(rng, f, 4);
      const VectorSignal s1b = test::random_signal(rng, f, 4);
      const VectorSignal s2 = test::random_signal(rng, f, 3);
      CHECK(convolve(a * s1 + s1b, s2) ==
            a * convolve(s1, s2) + convolve(s1b, s2));
    }
  }

  SUBCASE("conjugate-linear in the second argument") {
    auto f = test::field_cyc5();
    for (int i = 0; i < 20; ++i) {
      const FieldElement a = test::random_element(rng, f);
      const VectorSignal s1 = test::random_signal(rng, f, 4);
      const VectorSignal s2 = test::random_signal(rng, f, 3);
      CHECK(convolve(s1, a * s2) == conjugate(a) * convolve(s1, s2));
    }
  }
}

TEST_CASE("filtering") {
  std::mt19937_64 rng(17);

  SUBCASE("alias of convolve") {
    auto f = test::field_cyc5();
    const VectorSignal h = test::random_signal(rng, f, 3);
    const VectorSignal s = test::random_signal(rng, f, 5);
    CHECK(filter_signal(h, s) == convolve(h, s));
  }

  SUBCASE("impulse response passes a real-alpha signal through") {
    // Conjugation fixes every element here, so filtering by the unit
    // impulse is the identity.
    auto f = test::field_sqrt23();
    const VectorSignal s = test::random_signal(rng, f, 5);
    CHECK(filter_signal(VectorSignal::impulse(f), s) == s);
  }

  SUBCASE("length-1 filter scales the conjugated input") {
    auto g = test::field_gauss();
    const FieldElement c = test::random_element(rng, g);
    const VectorSignal s = test::random_signal(rng, g, 4);
    const VectorSignal lhs = filter_signal(VectorSignal(0, {c}), s);
    for (std::size_t n = 0; n < s.length(); ++n) {
      CHECK(lhs.elements()[n] == c * conjugate(s.elements()[n]));
    }
  }
}

TEST_CASE("gram-schmidt") {
  std::mt19937_64 rng(18);

  SUBCASE("orthogonal inputs pass through unchanged") {
    auto f = test::field_sqrt23();
    // Disjoint supports within a common length are orthogonal.
    const VectorSignal u1(0, {f->one(), f->zero(), f->zero()});
    const VectorSignal u2(0, {f->zero(), f->generator(), f->zero()});
    const auto out = gram_schmidt({u1, u2});
    CHECK(out[0] == u1);
    CHECK(out[1] == u2);
  }

  SUBCASE("identical inputs produce a zero slot") {
    auto f = test::field_cyc5();
    const VectorSignal s = test::random_signal(rng, f, 3);
    const auto out = gram_schmidt({s, s});
    CHECK(out[0] == s);
    CHECK(out[1].is_zero());
  }

  SUBCASE("outputs are pairwise orthogonal") {
    for (auto& f :
         {test::field_sqrt23(), test::field_cyc5(), test::field_gauss()}) {
      const std::size_t L = 4;
      std::vector<VectorSignal> in;
      for (std::size_t i = 0; i < L; ++i) {
        in.push_back(test::random_signal(rng, f, L));
      }
      const auto out = gram_schmidt(in);
      for (std::size_t i = 0; i < out.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
          CHECK(signal_inner(out[i], out[j]).is_zero());
        }
      }
    }
  }

  SUBCASE("more signals than length forces a zero output") {
    for (std::size_t L : {2, 3, 4}) {
      auto f = test::field_cyc5();
      std::vector<VectorSignal> in;
      for (std::size_t i = 0; i <= L; ++i) {
        in.push_back(test::random_signal(rng, f, L));
      }
      const auto out = gram_schmidt(in);
      bool has_zero = false;
      for (const auto& s : out) has_zero = has_zero || s.is_zero();
      CHECK(has_zero);
    }
  }

  SUBCASE("length mismatch is rejected") {
    auto f = test::field_sqrt23();
    CHECK_THROWS_AS(gram_schmidt({test::random_signal(rng, f, 3),
                                  test::random_signal(rng, f, 4)}),
                    parse_error);
  }
}

TEST_CASE("signal construction") {
  auto f = test::field_sqrt23();
  CHECK_THROWS_AS(VectorSignal(0, {}), parse_error);
  auto g = test::field_cyc5();
  CHECK_THROWS_AS(VectorSignal(0, {f->one(), g->one()}), parse_error);
  const VectorSignal s(-3, {f->one(), f->generator()});
  CHECK(s.at(-3) == f->one());
  CHECK(s.at(-2) == f->generator());
  CHECK(s.at(0).is_zero());
  CHECK(s.end() == -2);
}
