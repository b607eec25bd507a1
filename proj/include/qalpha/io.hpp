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

#ifndef QALPHA_IO_HPP
#define QALPHA_IO_HPP

#include <json.hpp>

#include <memory>
#include <string>
#include <vector>

#include "qalpha/linalg.hpp"
#include "qalpha/number_field.hpp"
#include "qalpha/quantize.hpp"
#include "qalpha/signal.hpp"

namespace qalpha::io {

using nlohmann::json;

// Rationals travel as exact strings ("num" or "num/den"), never as floats.
//
// Field spec   {"min_poly": ["1","0","-10","0","1"],
//               "conjugation": {"kind": "real"}}
//              conjugation kinds: {"kind": "real"}
//                                 {"kind": "cyclotomic", "p": 5}
//                                 {"kind": "explicit", "alpha_star": [...]}
// Signal       {"start": 0, "elements": [["1","0","0","0"], ...]}
// Matrix       {"rows": L, "cols": J, "entries": [[elem, ...], ...]}
//              where elem is a list of m rational strings.
// Coefficient order is ascending everywhere.

// Throws parse_error on malformed text.
json parse_json_text(const std::string& text);
json load_json_file(const std::string& path);

std::vector<Rational> rationals_from_json(const json& a);
json rationals_to_json(const std::vector<Rational>& v);

std::shared_ptr<const NumberField> field_from_json(const json& spec,
                                                   const FieldOptions& = {});
std::shared_ptr<const NumberField> load_field(const std::string& path,
                                              const FieldOptions& = {});
json field_to_json(const NumberField& field);

FieldElement element_from_json(const json& a,
                               const std::shared_ptr<const NumberField>&);
json element_to_json(const FieldElement& e);

VectorSignal signal_from_json(const json& s,
                              const std::shared_ptr<const NumberField>&);
json signal_to_json(const VectorSignal& s);
VectorSignal load_signal(const std::string& path,
                         const std::shared_ptr<const NumberField>&);

FieldMatrix matrix_from_json(const json& m,
                             const std::shared_ptr<const NumberField>&);
json matrix_to_json(const FieldMatrix& m);
FieldMatrix load_matrix(const std::string& path,
                        const std::shared_ptr<const NumberField>&);

// Real vectors accept rational strings, decimal strings, and JSON numbers
// (integers exact, floats as their dyadic value).
RealVector real_vector_from_json(const json& a);

}  // namespace qalpha::io

#endif  // QALPHA_IO_HPP
