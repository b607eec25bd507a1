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

#ifndef QALPHA_LINALG_HPP
#define QALPHA_LINALG_HPP

#include <memory>
#include <vector>

#include "qalpha/number_field.hpp"

namespace qalpha {

/// Rectangular matrix of field elements, row-major. Column vectors are
/// matrices with one column.
class FieldMatrix {
 public:
  // Zero-filled.
  FieldMatrix(const std::shared_ptr<const NumberField>& field,
              std::size_t rows, std::size_t cols);
  // Row-major entries; rows*cols of them, all in one field.
  FieldMatrix(std::size_t rows, std::size_t cols,
              std::vector<FieldElement> entries);

  static FieldMatrix identity(
      const std::shared_ptr<const NumberField>& field, std::size_t n);

  const std::shared_ptr<const NumberField>& field_ptr() const {
    return field_;
  }
  const NumberField& field() const { return *field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const FieldElement& at(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  FieldElement& at(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }

  bool operator==(const FieldMatrix& o) const;

 private:
  std::shared_ptr<const NumberField> field_;
  std::size_t rows_, cols_;
  std::vector<FieldElement> entries_;
};

FieldMatrix mat_mul(const FieldMatrix& a, const FieldMatrix& b);
FieldMatrix mat_sub(const FieldMatrix& a, const FieldMatrix& b);

// Transpose with entrywise conjugation (A^H).
FieldMatrix conjugate_transpose(const FieldMatrix& a);

// Exact Gaussian elimination for square A, pivot = first nonzero entry in
// the column (no magnitude ordering exists in exact field arithmetic).
// Throws math_error("singular ...") when a column has no nonzero pivot.
FieldMatrix solve(const FieldMatrix& a, const FieldMatrix& b);

// Exact determinant via elimination with swap-sign tracking.
FieldElement determinant(const FieldMatrix& a);

// Normal-equations solve of the overdetermined system: x from
// (A^H A) x = A^H b. Requires rows >= cols. Throws math_error when the
// normal matrix is singular.
FieldMatrix least_squares(const FieldMatrix& a, const FieldMatrix& b);

}  // namespace qalpha

#endif  // QALPHA_LINALG_HPP
