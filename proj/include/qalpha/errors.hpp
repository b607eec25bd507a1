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

#ifndef QALPHA_ERRORS_HPP
#define QALPHA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qalpha {

// Malformed input: unparseable rationals, bad JSON, dimension mismatches.
class parse_error : public std::runtime_error {
 public:
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Arithmetic failures: division by zero, inversion of zero, singular
// matrices, non-convergent root searches.
class math_error : public std::runtime_error {
 public:
  explicit math_error(const std::string& what) : std::runtime_error(what) {}
};

// Field construction failures: non-monic minimal polynomial, detected
// reducibility, inconclusive irreducibility checks, bad conjugation specs.
class validation_error : public std::runtime_error {
 public:
  explicit validation_error(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace qalpha

#endif  // QALPHA_ERRORS_HPP
