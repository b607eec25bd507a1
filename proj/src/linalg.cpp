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

#include "qalpha/linalg.hpp"

#include <utility>

namespace qalpha {

FieldMatrix::FieldMatrix(const std::shared_ptr<const NumberField>& field,
                         std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols) {
  if (rows_ == 0 || cols_ == 0) throw parse_error("empty matrix");
  entries_.assign(rows_ * cols_, field_->zero());
}

FieldMatrix::FieldMatrix(std::size_t rows, std::size_t cols,
                         std::vector<FieldElement> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ == 0 || cols_ == 0) throw parse_error("empty matrix");
  if (entries_.size() != rows_ * cols_) {
    throw parse_error("matrix needs rows*cols entries");
  }
  field_ = entries_.front().field_ptr();
  for (const auto& e : entries_) {
    if (e.field_ptr() != field_ && !e.field().same_field(*field_)) {
      throw parse_error("matrix entries belong to different fields");
    }
  }
}

FieldMatrix FieldMatrix::identity(
    const std::shared_ptr<const NumberField>& field, std::size_t n) {
  FieldMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field->one();
  return m;
}

bool FieldMatrix::operator==(const FieldMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
}

namespace {

void require_same_field(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.field_ptr() == b.field_ptr()) return;
  if (!a.field().same_field(b.field())) {
    throw parse_error("matrices belong to different fields");
  }
}

}  // namespace

FieldMatrix mat_mul(const FieldMatrix& a, const FieldMatrix& b) {
  require_same_field(a, b);
  if (a.cols() != b.rows()) throw parse_error("matrix shape mismatch");
  FieldMatrix out(a.field_ptr(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const FieldElement& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (b.at(k, j).is_zero()) continue;
        out.at(i, j) = out.at(i, j) + aik * b.at(k, j);
      }
    }
  }
  return out;
}

FieldMatrix mat_sub(const FieldMatrix& a, const FieldMatrix& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw parse_error("matrix shape mismatch");
  }
  FieldMatrix out(a.field_ptr(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out.at(i, j) = a.at(i, j) - b.at(i, j);
    }
  }
  return out;
}

FieldMatrix conjugate_transpose(const FieldMatrix& a) {
  FieldMatrix out(a.field_ptr(), a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out.at(j, i) = conjugate(a.at(i, j));
    }
  }
  return out;
}

FieldMatrix solve(const FieldMatrix& a, const FieldMatrix& b) {
  require_same_field(a, b);
  if (a.rows() != a.cols()) throw parse_error("solve needs a square matrix");
  if (b.rows() != a.rows()) throw parse_error("rhs row count mismatch");
  const std::size_t n = a.rows();
  FieldMatrix m = a;
  FieldMatrix rhs = b;

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m.at(pivot, col).is_zero()) ++pivot;
    if (pivot == n) throw math_error("singular matrix: no pivot in column " +
                                     std::to_string(col));
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m.at(pivot, j), m.at(col, j));
      }
      for (std::size_t j = 0; j < rhs.cols(); ++j) {
        std::swap(rhs.at(pivot, j), rhs.at(col, j));
      }
    }
    const FieldElement inv_pivot = inverse(m.at(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m.at(r, col).is_zero()) continue;
      const FieldElement factor = m.at(r, col) * inv_pivot;
      for (std::size_t j = col; j < n; ++j) {
        m.at(r, j) = m.at(r, j) - factor * m.at(col, j);
      }
      for (std::size_t j = 0; j < rhs.cols(); ++j) {
        rhs.at(r, j) = rhs.at(r, j) - factor * rhs.at(col, j);
      }
    }
  }

  FieldMatrix x(a.field_ptr(), n, rhs.cols());
  for (std::size_t jc = 0; jc < rhs.cols(); ++jc) {
    for (std::size_t ii = n; ii-- > 0;) {
      FieldElement acc = rhs.at(ii, jc);
      for (std::size_t j = ii + 1; j < n; ++j) {
        acc = acc - m.at(ii, j) * x.at(j, jc);
      }
      x.at(ii, jc) = acc / m.at(ii, ii);
    }
  }
  return x;
}

FieldElement determinant(const FieldMatrix& a) {
  if (a.rows() != a.cols()) {
    throw parse_error("determinant needs a square matrix");
  }
  const std::size_t n = a.rows();
  FieldMatrix m = a;
  bool negate = false;
  FieldElement det = a.field().one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m.at(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return a.field().zero();
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m.at(pivot, j), m.at(col, j));
      }
      negate = !negate;
    }
    det = det * m.at(col, col);
    const FieldElement inv_pivot = inverse(m.at(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m.at(r, col).is_zero()) continue;
      const FieldElement factor = m.at(r, col) * inv_pivot;
      for (std::size_t j = col; j < n; ++j) {
        m.at(r, j) = m.at(r, j) - factor * m.at(col, j);
      }
    }
  }
  return negate ? -det : det;
}

FieldMatrix least_squares(const FieldMatrix& a, const FieldMatrix& b) {
  require_same_field(a, b);
  if (a.rows() < a.cols()) {
    throw parse_error("least_squares needs rows >= cols");
  }
  if (b.rows() != a.rows()) throw parse_error("rhs row count mismatch");
  const FieldMatrix ah = conjugate_transpose(a);
  return solve(mat_mul(ah, a), mat_mul(ah, b));
}

}  // namespace qalpha
