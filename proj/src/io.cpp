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

#include "qalpha/io.hpp"

#include <fstream>
#include <sstream>

namespace qalpha::io {

json parse_json_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw parse_error("malformed JSON");
  return j;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str());
}

namespace {

Rational rational_from_json_value(const json& v, const char* what) {
  if (v.is_string()) return Rational::from_string(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw parse_error(std::string(what) +
                    ": expected a rational string or integer");
}

}  // namespace

std::vector<Rational> rationals_from_json(const json& a) {
  if (!a.is_array()) throw parse_error("expected an array of rationals");
  std::vector<Rational> out;
  out.reserve(a.size());
  for (const auto& v : a) {
    out.push_back(rational_from_json_value(v, "rational array"));
  }
  return out;
}

json rationals_to_json(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& r : v) a.push_back(r.str());
  return a;
}

std::shared_ptr<const NumberField> field_from_json(const json& spec,
                                                   const FieldOptions& opts) {
  if (!spec.is_object() || !spec.contains("min_poly")) {
    throw parse_error("field spec needs a \"min_poly\" array");
  }
  RationalPoly min_poly(rationals_from_json(spec.at("min_poly")));
  ConjugationSpec conj = ConjugationSpec::real_alpha();
  if (spec.contains("conjugation")) {
    const json& c = spec.at("conjugation");
    if (!c.is_object() || !c.contains("kind")) {
      throw parse_error("conjugation spec needs a \"kind\"");
    }
    const std::string kind = c.at("kind").get<std::string>();
    if (kind == "real") {
      conj = ConjugationSpec::real_alpha();
    } else if (kind == "cyclotomic") {
      if (!c.contains("p") || !c.at("p").is_number_integer()) {
        throw parse_error("cyclotomic conjugation needs integer \"p\"");
      }
      conj = ConjugationSpec::cyclotomic(c.at("p").get<unsigned>());
    } else if (kind == "explicit") {
      if (!c.contains("alpha_star")) {
        throw parse_error("explicit conjugation needs \"alpha_star\"");
      }
      conj = ConjugationSpec::explicit_map(
          rationals_from_json(c.at("alpha_star")));
    } else {
      throw parse_error("unknown conjugation kind: '" + kind + "'");
    }
  }
  return NumberField::create(std::move(min_poly), std::move(conj), opts);
}

std::shared_ptr<const NumberField> load_field(const std::string& path,
                                              const FieldOptions& opts) {
  return field_from_json(load_json_file(path), opts);
}

json field_to_json(const NumberField& field) {
  json j;
  j["min_poly"] = rationals_to_json(field.min_poly().coeffs());
  json c;
  switch (field.conjugation().kind()) {
    case ConjugationSpec::Kind::RealAlpha:
      c["kind"] = "real";
      break;
    case ConjugationSpec::Kind::CyclotomicPrime:
      c["kind"] = "cyclotomic";
      c["p"] = field.conjugation().prime();
      break;
    case ConjugationSpec::Kind::Explicit:
      c["kind"] = "explicit";
      c["alpha_star"] = rationals_to_json(field.conjugation().alpha_star());
      break;
  }
  j["conjugation"] = std::move(c);
  return j;
}

FieldElement element_from_json(
    const json& a, const std::shared_ptr<const NumberField>& field) {
  return field->element(rationals_from_json(a));
}

json element_to_json(const FieldElement& e) {
  return rationals_to_json(e.coeffs());
}

VectorSignal signal_from_json(
    const json& s, const std::shared_ptr<const NumberField>& field) {
  if (!s.is_object() || !s.contains("elements")) {
    throw parse_error("signal needs an \"elements\" array");
  }
  long long start = 0;
  if (s.contains("start")) {
    if (!s.at("start").is_number_integer()) {
      throw parse_error("signal \"start\" must be an integer");
    }
    start = s.at("start").get<long long>();
  }
  const json& els = s.at("elements");
  if (!els.is_array() || els.empty()) {
    throw parse_error("signal \"elements\" must be a nonempty array");
  }
  std::vector<FieldElement> elements;
  elements.reserve(els.size());
  for (const auto& e : els) elements.push_back(element_from_json(e, field));
  return VectorSignal(start, std::move(elements));
}

json signal_to_json(const VectorSignal& s) {
  json j;
  j["start"] = s.start();
  json els = json::array();
  for (const auto& e : s.elements()) els.push_back(element_to_json(e));
  j["elements"] = std::move(els);
  return j;
}

VectorSignal load_signal(const std::string& path,
                         const std::shared_ptr<const NumberField>& field) {
  return signal_from_json(load_json_file(path), field);
}

FieldMatrix matrix_from_json(
    const json& m, const std::shared_ptr<const NumberField>& field) {
  if (!m.is_object() || !m.contains("rows") || !m.contains("cols") ||
      !m.contains("entries")) {
    throw parse_error("matrix needs \"rows\", \"cols\" and \"entries\"");
  }
  const auto rows = m.at("rows").get<std::size_t>();
  const auto cols = m.at("cols").get<std::size_t>();
  const json& entries = m.at("entries");
  if (!entries.is_array() || entries.size() != rows) {
    throw parse_error("matrix entries must have \"rows\" rows");
  }
  std::vector<FieldElement> flat;
  flat.reserve(rows * cols);
  for (const auto& row : entries) {
    if (!row.is_array() || row.size() != cols) {
      throw parse_error("matrix row must have \"cols\" entries");
    }
    for (const auto& e : row) flat.push_back(element_from_json(e, field));
  }
  return FieldMatrix(rows, cols, std::move(flat));
}

json matrix_to_json(const FieldMatrix& m) {
  json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  json entries = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      row.push_back(element_to_json(m.at(i, c)));
    }
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  return j;
}

FieldMatrix load_matrix(const std::string& path,
                        const std::shared_ptr<const NumberField>& field) {
  return matrix_from_json(load_json_file(path), field);
}

RealVector real_vector_from_json(const json& a) {
  if (!a.is_array()) throw parse_error("expected an array of reals");
  RealVector out;
  out.reserve(a.size());
  for (const auto& v : a) {
    if (v.is_string()) {
      out.push_back(RealScalar::from_string(v.get<std::string>()));
    } else if (v.is_number_integer()) {
      out.push_back(RealScalar{Rational(v.get<long>()), true});
    } else if (v.is_number_float()) {
      out.push_back(RealScalar::from_double(v.get<double>()));
    } else {
      throw parse_error("real vector entries must be strings or numbers");
    }
  }
  return out;
}

}  // namespace qalpha::io
