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

#ifndef QALPHA_SIGNAL_HPP
#define QALPHA_SIGNAL_HPP

#include <memory>
#include <vector>

#include "qalpha/number_field.hpp"

namespace qalpha {

/// Finite-length signal of field elements with an integer support offset:
/// the value at index n is elements[n - start], and the zero element
/// everywhere else. Immutable value.
class VectorSignal {
 public:
  VectorSignal(long long start, std::vector<FieldElement> elements);

  static VectorSignal zero(const std::shared_ptr<const NumberField>& field,
                           long long start, std::size_t length);
  // The unit impulse: identity element at the given index.
  static VectorSignal impulse(const std::shared_ptr<const NumberField>& field,
                              long long at = 0);

  const std::shared_ptr<const NumberField>& field_ptr() const {
    return field_;
  }
  const NumberField& field() const { return *field_; }
  long long start() const { return start_; }
  long long end() const {  // last index of the support
    return start_ + static_cast<long long>(elements_.size()) - 1;
  }
  std::size_t length() const { return elements_.size(); }
  const std::vector<FieldElement>& elements() const { return elements_; }

  // Value at arbitrary index n (zero outside the support).
  FieldElement at(long long n) const;
  bool is_zero() const;

  bool operator==(const VectorSignal& o) const;

 private:
  std::shared_ptr<const NumberField> field_;
  long long start_;
  std::vector<FieldElement> elements_;
};

// <s1, s2> = sum over n of <s1(n), s2(n)>; signals are aligned by index and
// padded with zero elements where their supports differ.
FieldElement signal_inner(const VectorSignal& s1, const VectorSignal& s2);

// (s1 * s2)(n) = sum over k of s1(k) * conjugate(s2(n - k)). Output support:
// start1 + start2, length L1 + L2 - 1.
VectorSignal convolve(const VectorSignal& s1, const VectorSignal& s2);

// Linear filtering of input s by impulse response h; alias of convolve(h, s).
VectorSignal filter_signal(const VectorSignal& h, const VectorSignal& s);

// Per-element scalar multiplication and aligned addition (support = union).
VectorSignal operator*(const FieldElement& a, const VectorSignal& s);
VectorSignal operator+(const VectorSignal& a, const VectorSignal& b);
VectorSignal operator-(const VectorSignal& a, const VectorSignal& b);

// Classical Gram-Schmidt under signal_inner. Inputs must share one field
// and one length. An input in the span of its predecessors comes out as the
// zero signal in its slot; nonzero outputs are pairwise orthogonal.
std::vector<VectorSignal> gram_schmidt(const std::vector<VectorSignal>& in);

}  // namespace qalpha

#endif  // QALPHA_SIGNAL_HPP
