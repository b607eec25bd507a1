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

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef QALPHA_CLI_PATH
#error "QALPHA_CLI_PATH must point at the built binary"
#endif
#ifndef QALPHA_SOURCE_DIR
#error "QALPHA_SOURCE_DIR must point at the project root"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(QALPHA_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) {
    r.out.append(buf.data(), n);
  }
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write_temp(const std::string& name, const std::string& body) {
  const std::string path = std::string("cli_tmp_") + name;
  std::ofstream f(path);
  f << body;
  return path;
}

const std::string kFieldA = write_temp("sqrt23.json",
    R"({"min_poly": ["1","0","-10","0","1"], "conjugation": {"kind": "real"}})");
const std::string kFieldC3 = write_temp("cyc3.json",
    R"({"min_poly": ["1","1","1"], "conjugation": {"kind": "cyclotomic", "p": 3}})");

}  // namespace

TEST_CASE("vec subcommands") {
  auto mul = run_cli("vec mul --field " + kFieldA +
                     " \"[1,1,1,1]\" \"[1,1,-1,-1]\"");
  CHECK(mul.exit_code == 0);
  CHECK(mul.out == "[12, 4, -108, -20]\n");

  auto inv = run_cli("vec inv --field " + kFieldA + " \"[1,0,0,0]\"");
  CHECK(inv.exit_code == 0);
  CHECK(inv.out == "[1, 0, 0, 0]\n");

  auto conj = run_cli("vec conj --field " + kFieldC3 + " \"[5,2]\"");
  CHECK(conj.exit_code == 0);
  CHECK(conj.out == "[3, -2]\n");

  auto json_mode = run_cli("vec mul --format json --field " + kFieldA +
                           " \"[1,1,1,1]\" \"[1,1,-1,-1]\"");
  CHECK(json_mode.exit_code == 0);
  const auto j = nlohmann::json::parse(json_mode.out);
  CHECK(j.at("result") ==
        nlohmann::json::array({"12", "4", "-108", "-20"}));

  auto desc = run_cli("vec mul --order desc --field " + kFieldA +
                      " \"[1,1,1,1]\" \"[-1,-1,1,1]\"");
  CHECK(desc.out == "[-20, -108, 4, 12]\n");
}

TEST_CASE("vec output round-trips byte-identically") {
  for (const std::string args :
       {std::string("vec mul --field ") + kFieldA +
            " \"[1/2,0,-3,7/5]\" \"[2/7,1,0,-1]\"",
        std::string("vec inv --field ") + kFieldA + " \"[0,1,0,0]\"",
        std::string("vec inner --field ") + kFieldA +
            " \"[1,2,3,4]\" \"[4,3,2,1]\""}) {
    const auto first = run_cli(args);
    CHECK(first.exit_code == 0);
    // Feed the printed vector back through an identity operation.
    std::string body = first.out.substr(0, first.out.size() - 1);
    auto echo = run_cli("vec mul --field " + kFieldA + " \"" + body +
                        "\" \"[1,0,0,0]\"");
    CHECK(echo.out == first.out);
  }
}

TEST_CASE("exit codes") {
  CHECK(run_cli("vec mul --field " + kFieldA + " \"[1,1]\" \"[1,1]\"")
            .exit_code == 2);  // wrong arity for the field
  CHECK(run_cli("vec div --field " + kFieldA +
                " \"[1,0,0,0]\" \"[0,0,0,0]\"")
            .exit_code == 3);
  const std::string bad = write_temp("reducible.json",
      R"({"min_poly": ["-1","0","1"], "conjugation": {"kind": "real"}})");
  auto r = run_cli("vec mul --field " + bad + " \"[1,1]\" \"[1,1]\"");
  CHECK(r.exit_code == 4);
  CHECK(r.out.find("reducible") != std::string::npos);
  CHECK(run_cli("nonsense").exit_code == 2);
}

TEST_CASE("demo matches the checked-in golden file byte for byte") {
  const auto demo = run_cli("demo");
  CHECK(demo.exit_code == 0);
  std::ifstream golden(std::string(QALPHA_SOURCE_DIR) +
                       "/tests/golden/demo.golden");
  REQUIRE(golden.good());
  std::ostringstream buf;
  buf << golden.rdbuf();
  CHECK(demo.out == buf.str());

  // Deterministic: a second run produces identical bytes.
  CHECK(run_cli("demo").out == demo.out);
}

TEST_CASE("demo in json mode") {
  const auto demo = run_cli("demo --format json");
  CHECK(demo.exit_code == 0);
  const auto j = nlohmann::json::parse(demo.out);
  CHECK(j.at("passed") == j.at("total"));
  CHECK(j.at("cases").size() == j.at("total").get<std::size_t>());
}

TEST_CASE("demo flags a corrupted field spec") {
  // Valid irreducible quartic, but not the one the expectations pin.
  const std::string wrong = write_temp("wrong.json",
      R"({"min_poly": ["1","0","-9","0","1"], "conjugation": {"kind": "real"}})");
  const auto demo = run_cli("demo --field " + wrong);
  CHECK(demo.exit_code == 1);
  CHECK(demo.out.find("FAIL") != std::string::npos);

  // A spec that fails validation outright reports the field error.
  const std::string invalid = write_temp("invalid.json",
      R"({"min_poly": ["-1","0","1"], "conjugation": {"kind": "real"}})");
  CHECK(run_cli("demo --field " + invalid).exit_code == 4);
}

TEST_CASE("quantize subcommand") {
  auto q = run_cli("quantize \"[0.3333333333]\" --epsilon 0.01");
  CHECK(q.out == "[43/128]\n");
  auto cf = run_cli("quantize \"[0.3333333333]\" --epsilon 0.01 --quantizer cf");
  CHECK(cf.out == "[1/3]\n");
  auto pass = run_cli("quantize \"[2/7,-1/3]\"");
  CHECK(pass.out == "[2/7, -1/3]\n");
}

TEST_CASE("signal subcommands") {
  const std::string gauss = write_temp("gauss.json",
      R"({"min_poly": ["1","0","1"], "conjugation": {"kind": "explicit", "alpha_star": ["0","-1"]}})");
  const std::string s1 = write_temp("s1.json",
      R"({"start": 0, "elements": [["1","0"], ["0","1"]]})");
  const std::string s2 = write_temp("s2.json",
      R"({"start": 0, "elements": [["1","0"], ["1","0"]]})");
  const std::string imp = write_temp("imp.json",
      R"({"start": 0, "elements": [["1","0"]]})");

  auto conv = run_cli("signal conv --field " + gauss + " " + s1 + " " + s2);
  CHECK(conv.exit_code == 0);
  const auto j = nlohmann::json::parse(conv.out);
  CHECK(j.at("elements") ==
        nlohmann::json::parse(R"([["1","0"],["1","1"],["0","1"]])"));

  // Convolving with the unit impulse on the right returns the input.
  auto echo = run_cli("signal conv --field " + gauss + " " + s1 + " " + imp);
  const auto je = nlohmann::json::parse(echo.out);
  CHECK(je.at("elements") ==
        nlohmann::json::parse(R"([["1","0"],["0","1"]])"));

  auto gram = run_cli("signal gram --field " + gauss + " " + s1 + " " + s1);
  const auto jg = nlohmann::json::parse(gram.out);
  REQUIRE(jg.at("signals").size() == 2);
  CHECK(jg.at("signals")[1].at("elements") ==
        nlohmann::json::parse(R"([["0","0"],["0","0"]])"));
}

TEST_CASE("solve subcommands") {
  const std::string a = write_temp("A.json", R"({"rows": 2, "cols": 2,
      "entries": [[["1","0","0","0"],["0","0","0","0"]],
                  [["0","0","0","0"],["1","0","0","0"]]]})");
  const std::string b = write_temp("b.json", R"({"rows": 2, "cols": 1,
      "entries": [[["3","1","0","0"]],[["0","0","2","0"]]]})");
  auto x = run_cli("solve exact --field " + kFieldA + " " + a + " " + b);
  CHECK(x.exit_code == 0);
  const auto jx = nlohmann::json::parse(x.out);
  CHECK(jx.at("entries")[0][0] ==
        nlohmann::json::parse(R"(["3","1","0","0"])"));

  auto lsq = run_cli("solve lsq --field " + kFieldA + " " + a + " " + b);
  CHECK(lsq.out == x.out);

  const std::string sing = write_temp("sing.json", R"({"rows": 2, "cols": 2,
      "entries": [[["1","0","0","0"],["2","0","0","0"]],
                  [["1","0","0","0"],["2","0","0","0"]]]})");
  auto bad = run_cli("solve exact --field " + kFieldA + " " + sing + " " + b);
  CHECK(bad.exit_code == 3);
  CHECK(bad.out.find("singular") != std::string::npos);
}
