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

#include "qalpha/io.hpp"
#include "test_support.hpp"

using namespace qalpha;

TEST_CASE("field specs parse") {
  const auto spec = io::parse_json_text(
      R"({"min_poly": ["1","0","-10","0","1"], "conjugation": {"kind": "real"}})");
  auto f = io::field_from_json(spec);
  CHECK(f->degree() == 4);
  CHECK(f->conjugation().kind() == ConjugationSpec::Kind::RealAlpha);

  const auto cyc = io::parse_json_text(
      R"({"min_poly": ["1","1","1","1","1"], "conjugation": {"kind": "cyclotomic", "p": 5}})");
  CHECK(io::field_from_json(cyc)->conjugation().prime() == 5);

  const auto exp = io::parse_json_text(
      R"({"min_poly": ["1","0","1"], "conjugation": {"kind": "explicit", "alpha_star": ["0","-1"]}})");
  CHECK(io::field_from_json(exp)->conjugation().kind() ==
        ConjugationSpec::Kind::Explicit);

  CHECK_THROWS_AS(io::parse_json_text("{nope"), parse_error);
  CHECK_THROWS_AS(io::field_from_json(io::parse_json_text("{}")),
                  parse_error);
  CHECK_THROWS_AS(
      io::field_from_json(io::parse_json_text(
          R"({"min_poly": ["1","0","1"], "conjugation": {"kind": "odd"}})")),
      parse_error);
}

TEST_CASE("field spec round-trip") {
  for (auto& f :
       {test::field_sqrt23(), test::field_cyc5(), test::field_gauss()}) {
    auto g = io::field_from_json(io::field_to_json(*f));
    CHECK(g->same_field(*f));
  }
}

TEST_CASE("signal and matrix round-trips on random data") {
  std::mt19937_64 rng(24);
  auto f = test::field_cyc5();
  for (int i = 0; i < 25; ++i) {
    const VectorSignal s = test::random_signal(rng, f, 5, -3);
    CHECK(io::signal_from_json(io::signal_to_json(s), f) == s);

    FieldMatrix m(f, 2, 3);
    for (std::size_t r = 0; r < 2; ++r) {
      for (std::size_t c = 0; c < 3; ++c) {
        m.at(r, c) = test::random_element(rng, f);
      }
    }
    CHECK(io::matrix_from_json(io::matrix_to_json(m), f) == m);
  }
}

TEST_CASE("malformed payloads are rejected") {
  auto f = test::field_cyc5();
  CHECK_THROWS_AS(
      io::signal_from_json(io::parse_json_text(R"({"start": 0})"), f),
      parse_error);
  CHECK_THROWS_AS(io::signal_from_json(
                      io::parse_json_text(
                          R"({"start": 0, "elements": [["1","2"]]})"),
                      f),
                  parse_error);
  CHECK_THROWS_AS(
      io::matrix_from_json(
          io::parse_json_text(R"({"rows": 2, "cols": 1, "entries": []})"),
          f),
      parse_error);
}

TEST_CASE("real vectors accept strings and numbers") {
  const auto v = io::real_vector_from_json(
      io::parse_json_text(R"(["2/7", "0.25", 3, 0.5])"));
  CHECK(v[0].exact);
  CHECK(v[0].value == Rational(2, 7));
  CHECK_FALSE(v[1].exact);
  CHECK(v[1].value == Rational(1, 4));
  CHECK(v[2].exact);
  CHECK(v[2].value == Rational(3));
  CHECK_FALSE(v[3].exact);
  CHECK(v[3].value == Rational(1, 2));
}
