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

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qalpha/io.hpp"
#include "qalpha/linalg.hpp"
#include "qalpha/number_field.hpp"
#include "qalpha/quantize.hpp"
#include "qalpha/signal.hpp"

namespace {

using namespace qalpha;

// Exit codes: 0 success, 1 demo mismatch, 2 parse error, 3 math error,
// 4 field validation error.

struct GlobalOpts {
  std::string field_path;
  std::string epsilon = "1e-9";
  std::string norm = "linf";
  std::string quantizer = "dyadic";
  std::string format = "table";
  std::string order = "asc";

  bool descending() const { return order == "desc"; }
  bool json() const { return format == "json"; }

  EpsilonConfig eps_config() const {
    EpsilonConfig cfg;
    cfg.epsilon = Rational::from_string(epsilon);
    if (cfg.epsilon.sign() <= 0) throw parse_error("epsilon must be > 0");
    cfg.norm = norm_from_name(norm);
    cfg.strategy = strategy_from_name(quantizer);
    return cfg;
  }

  std::shared_ptr<const NumberField> load_field() const {
    if (field_path.empty()) {
      throw parse_error("this command needs --field <spec.json>");
    }
    return io::load_field(field_path);
  }
};

// Inline vector literal: "[1, 1, -1, -1]" or "[1/2, 0.25]"; items may be
// quoted. Rational forms are exact, decimal forms get quantized.
RealVector parse_inline_vector(const std::string& text, bool descending) {
  std::string s = text;
  auto drop = [&](char c) {
    s.erase(std::remove(s.begin(), s.end(), c), s.end());
  };
  drop('[');
  drop(']');
  drop('"');
  drop('\'');
  drop(' ');
  RealVector out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw parse_error("empty vector component");
    out.push_back(RealScalar::from_string(item));
  }
  if (out.empty()) throw parse_error("empty vector literal");
  if (descending) std::reverse(out.begin(), out.end());
  return out;
}

std::string render_rationals(std::vector<Rational> v, const GlobalOpts& g) {
  if (g.descending()) std::reverse(v.begin(), v.end());
  if (g.json()) {
    nlohmann::json j;
    j["result"] = io::rationals_to_json(v);
    return j.dump();
  }
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].str();
  }
  s += "]";
  return s;
}

void run_vec(const std::string& op, const std::vector<std::string>& args,
             const GlobalOpts& g) {
  auto field = g.load_field();
  const EpsilonConfig cfg = g.eps_config();
  auto lift = [&](const std::string& a) {
    return eps_lift(parse_inline_vector(a, g.descending()), field, cfg);
  };
  FieldElement result = field->zero();
  if (op == "inv") {
    result = inverse(lift(args.at(0)));
  } else if (op == "conj") {
    result = conjugate(lift(args.at(0)));
  } else if (op == "inner") {
    result = inner_product(lift(args.at(0)), lift(args.at(1)));
  } else {
    result = eps_arith(arith_op_from_name(op),
                       parse_inline_vector(args.at(0), g.descending()),
                       parse_inline_vector(args.at(1), g.descending()),
                       field, cfg);
  }
  std::cout << render_rationals(result.coeffs(), g) << "\n";
}

void run_signal(const std::string& op, const std::vector<std::string>& files,
                const GlobalOpts& g) {
  auto field = g.load_field();
  std::vector<VectorSignal> signals;
  signals.reserve(files.size());
  for (const auto& f : files) signals.push_back(io::load_signal(f, field));
  if (op == "inner") {
    std::cout << render_rationals(
                     signal_inner(signals.at(0), signals.at(1)).coeffs(), g)
              << "\n";
    return;
  }
  if (op == "gram") {
    nlohmann::json out;
    out["signals"] = nlohmann::json::array();
    for (const auto& s : gram_schmidt(signals)) {
      out["signals"].push_back(io::signal_to_json(s));
    }
    std::cout << out.dump() << "\n";
    return;
  }
  const VectorSignal result =
      op == "conv" ? convolve(signals.at(0), signals.at(1))
                   : filter_signal(signals.at(0), signals.at(1));
  std::cout << io::signal_to_json(result).dump() << "\n";
}

void run_solve(const std::string& mode, const std::string& a_path,
               const std::string& b_path, const GlobalOpts& g) {
  auto field = g.load_field();
  const FieldMatrix a = io::load_matrix(a_path, field);
  const FieldMatrix b = io::load_matrix(b_path, field);
  const FieldMatrix x =
      mode == "lsq" ? least_squares(a, b) : qalpha::solve(a, b);
  std::cout << io::matrix_to_json(x).dump() << "\n";
}

void run_quantize(const std::string& arg, const GlobalOpts& g) {
  const RealVector r = parse_inline_vector(arg, g.descending());
  std::cout << render_rationals(quantize(r, g.eps_config()), g) << "\n";
}

// ---------------------------------------------------------------------------
// demo: golden walkthrough of the worked examples.
// ---------------------------------------------------------------------------

struct DemoCase {
  std::string name;
  std::string input;
  std::string expected;
  std::string actual;
  bool pass = false;
};

std::vector<DemoCase> run_demo_cases(const GlobalOpts& g) {
  std::vector<DemoCase> cases;
  auto add = [&](std::string name, std::string input, std::string expected,
                 std::string actual) {
    DemoCase c{std::move(name), std::move(input), std::move(expected),
               std::move(actual)};
    c.pass = c.expected == c.actual;
    cases.push_back(std::move(c));
  };

  // Field A comes from --field when given, so a corrupted spec shows up as
  // FAIL lines against the frozen expectations.
  std::shared_ptr<const NumberField> fa =
      g.field_path.empty()
          ? NumberField::create(RationalPoly{1, 0, -10, 0, 1},
                                ConjugationSpec::real_alpha())
          : io::load_field(g.field_path);
  auto fb = NumberField::create(RationalPoly{1, 1, 1, 1, 1},
                                ConjugationSpec::cyclotomic(5));
  auto fc = NumberField::create(RationalPoly{1, 1, 1},
                                ConjugationSpec::cyclotomic(3));

  add("validate-A", "p(x) = " + fa->min_poly().str() + ", real alpha",
      "degree 4", "degree " + std::to_string(fa->degree()));
  add("validate-B", "p(x) = " + fb->min_poly().str() + ", cyclotomic-5",
      "degree 4", "degree " + std::to_string(fb->degree()));

  const std::vector<long> u{1, 1, 1, 1}, w{1, 1, -1, -1};
  add("vec-mul-A", "[1, 1, 1, 1] * [1, 1, -1, -1]", "[12, 4, -108, -20]",
      (fa->element_from_longs(u) * fa->element_from_longs(w)).str());
  add("vec-mul-B", "[1, 1, 1, 1] * [1, 1, -1, -1]", "[0, 2, 2, 1]",
      (fb->element_from_longs(u) * fb->element_from_longs(w)).str());

  add("vec-conj-C", "conj([5, 2])", "[3, -2]",
      conjugate(fc->element_from_longs({5, 2})).str());

  add("inner-A", "<[0, 1, 0, 0], [0, 1, 0, 0]>", "[0, 0, 1, 0]",
      inner_product(fa->generator(), fa->generator()).str());

  add("embed-A", "alpha", "3.1462643699", embed(fa->generator()).re.str(10));
  add("residual-A", "|p(alpha)|", "0.0000000000",
      evaluate(fa->min_poly(), fa->numeric_root()).abs().str(10));

  EpsilonConfig cfg;
  add("eps-mul-A", "[1, 1, 1, 1] * [1, 1, -1, -1] via epsilon-arithmetic",
      "[12, 4, -108, -20]",
      eps_arith(ArithOp::Mul,
                parse_inline_vector("[1,1,1,1]", false),
                parse_inline_vector("[1,1,-1,-1]", false), fa, cfg)
          .str());
  return cases;
}

int run_demo(const GlobalOpts& g) {
  const std::vector<DemoCase> cases = run_demo_cases(g);
  std::size_t passed = 0;
  for (const auto& c : cases) passed += c.pass ? 1 : 0;

  if (g.json()) {
    nlohmann::json out;
    out["cases"] = nlohmann::json::array();
    for (const auto& c : cases) {
      nlohmann::json jc;
      jc["name"] = c.name;
      jc["input"] = c.input;
      jc["expected"] = c.expected;
      jc["actual"] = c.actual;
      jc["pass"] = c.pass;
      out["cases"].push_back(std::move(jc));
    }
    out["passed"] = passed;
    out["total"] = cases.size();
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "qalpha demo: worked examples, exact arithmetic\n";
    for (std::size_t i = 0; i < cases.size(); ++i) {
      const auto& c = cases[i];
      std::cout << "[" << i + 1 << "] " << std::left << std::setw(12)
                << c.name << " input: " << c.input
                << " | expected: " << c.expected << " | actual: " << c.actual
                << " | " << (c.pass ? "PASS" : "FAIL") << "\n";
    }
    std::cout << "demo: " << passed << "/" << cases.size() << " passed\n";
  }
  return passed == cases.size() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact arithmetic for rational vectors in Q(alpha)"};
  app.fallthrough();
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--field", g.field_path, "field spec JSON file");
  app.add_option("--epsilon", g.epsilon,
                 "quantization tolerance (default 1e-9)");
  app.add_option("--norm", g.norm, "quantization norm: linf | l2")
      ->check(CLI::IsMember({"linf", "l2"}));
  app.add_option("--quantizer", g.quantizer, "strategy: dyadic | cf")
      ->check(CLI::IsMember({"dyadic", "cf"}));
  app.add_option("--format", g.format, "output format: table | json")
      ->check(CLI::IsMember({"table", "json"}));
  app.add_option("--order", g.order,
                 "coefficient order for inline vectors: asc | desc")
      ->check(CLI::IsMember({"asc", "desc"}));

  int rc = 0;

  // Positionals are plain strings: CLI11 comma-splits vector options, which
  // would tear apart literals like "[1,1,1,1]".
  auto* vec = app.add_subcommand("vec", "vector arithmetic in the field");
  for (const std::string op : {"add", "sub", "mul", "div", "inv", "conj",
                               "inner"}) {
    auto* c = vec->add_subcommand(op);
    auto a1 = std::make_shared<std::string>();
    auto a2 = std::make_shared<std::string>();
    c->add_option("v1", *a1, "vector literal like \"[1,1,1,1]\"")->required();
    const bool unary = (op == "inv" || op == "conj");
    if (!unary) c->add_option("v2", *a2, "second vector literal")->required();
    c->callback([op, a1, a2, unary, &g]() {
      std::vector<std::string> args{*a1};
      if (!unary) args.push_back(*a2);
      run_vec(op, args, g);
    });
  }

  auto* sig = app.add_subcommand("signal", "vector-valued signal processing");
  for (const std::string op : {"conv", "filter", "inner", "gram"}) {
    auto* c = sig->add_subcommand(op);
    auto files = std::make_shared<std::vector<std::string>>();
    auto* opt = c->add_option("files", *files, "signal JSON files")
                    ->required()
                    ->delimiter('\0');
    if (op != "gram") opt->expected(2);
    c->callback([op, files, &g]() { run_signal(op, *files, g); });
  }

  auto* slv = app.add_subcommand("solve", "exact linear systems");
  for (const std::string mode : {"exact", "lsq"}) {
    auto* c = slv->add_subcommand(mode);
    auto a_path = std::make_shared<std::string>();
    auto b_path = std::make_shared<std::string>();
    c->add_option("matrix", *a_path, "system matrix JSON")->required();
    c->add_option("rhs", *b_path, "right-hand side JSON")->required();
    c->callback([mode, a_path, b_path, &g]() {
      run_solve(mode, *a_path, *b_path, g);
    });
  }

  auto* qz = app.add_subcommand("quantize", "epsilon-quantize a real vector");
  {
    auto arg = std::make_shared<std::string>();
    qz->add_option("vector", *arg, "vector literal")->required();
    qz->callback([arg, &g]() { run_quantize(*arg, g); });
  }

  auto* demo = app.add_subcommand("demo", "golden worked-example walkthrough");
  demo->callback([&g, &rc]() { rc = run_demo(g); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const parse_error& e) {
    std::cerr << "error (parse): " << e.what() << "\n";
    return 2;
  } catch (const math_error& e) {
    std::cerr << "error (math): " << e.what() << "\n";
    return 3;
  } catch (const validation_error& e) {
    std::cerr << "error (field validation): " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
