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

#include "qalpha/signal.hpp"

#include <algorithm>

namespace qalpha {

namespace {

void require_same_field(const VectorSignal& a, const VectorSignal& b) {
  if (a.field_ptr() == b.field_ptr()) return;
  if (!a.field().same_field(b.field())) {
    throw parse_error("signals belong to different fields");
  }
}

}  // namespace

VectorSignal::VectorSignal(long long start,
                           std::vector<FieldElement> elements)
    : start_(start), elements_(std::move(elements)) {
  if (elements_.empty()) {
    throw parse_error("signal needs at least one element");
  }
  field_ = elements_.front().field_ptr();
  for (const auto& e : elements_) {
    if (e.field_ptr() != field_ && !e.field().same_field(*field_)) {
      throw parse_error("signal elements belong to different fields");
    }
  }
}

VectorSignal VectorSignal::zero(
    const std::shared_ptr<const NumberField>& field, long long start,
    std::size_t length) {
  std::vector<FieldElement> e(length, field->zero());
  return VectorSignal(start, std::move(e));
}

VectorSignal VectorSignal::impulse(
    const std::shared_ptr<const NumberField>& field, long long at) {
  return VectorSignal(at, {field->one()});
}

FieldElement VectorSignal::at(long long n) const {
  if (n < start_ || n > end()) return field_->zero();
  return elements_[static_cast<std::size_t>(n - start_)];
}

bool VectorSignal::is_zero() const {
  return std::all_of(elements_.begin(), elements_.end(),
                     [](const FieldElement& e) { return e.is_zero(); });
}

bool VectorSignal::operator==(const VectorSignal& o) const {
  return field_->same_field(*o.field_) && start_ == o.start_ &&
         elements_ == o.elements_;
}

FieldElement signal_inner(const VectorSignal& s1, const VectorSignal& s2) {
  require_same_field(s1, s2);
  const long long lo = std::min(s1.start(), s2.start());
  const long long hi = std::max(s1.end(), s2.end());
  FieldElement acc = s1.field().zero();
  for (long long n = lo; n <= hi; ++n) {
    const FieldElement a = s1.at(n);
    const FieldElement b = s2.at(n);
    if (a.is_zero() || b.is_zero()) continue;
    acc = acc + inner_product(a, b);
  }
  return acc;
}

VectorSignal convolve(const VectorSignal& s1, const VectorSignal& s2) {
  require_same_field(s1, s2);
  const std::size_t out_len = s1.length() + s2.length() - 1;
  std::vector<FieldElement> conj2;
  conj2.reserve(s2.length());
  for (const auto& e : s2.elements()) conj2.push_back(conjugate(e));
  std::vector<FieldElement> out(out_len, s1.field().zero());
  for (std::size_t i = 0; i < s1.length(); ++i) {
    const FieldElement& a = s1.elements()[i];
    if (a.is_zero()) continue;
    for (std::size_t j = 0; j < s2.length(); ++j) {
      if (conj2[j].is_zero()) continue;
      out[i + j] = out[i + j] + a * conj2[j];
    }
  }
  return VectorSignal(s1.start() + s2.start(), std::move(out));
}

VectorSignal filter_signal(const VectorSignal& h, const VectorSignal& s) {
  return convolve(h, s);
}

VectorSignal operator*(const FieldElement& a, const VectorSignal& s) {
  std::vector<FieldElement> out;
  out.reserve(s.length());
  for (const auto& e : s.elements()) out.push_back(a * e);
  return VectorSignal(s.start(), std::move(out));
}

VectorSignal operator+(const VectorSignal& a, const VectorSignal& b) {
  require_same_field(a, b);
  const long long lo = std::min(a.start(), b.start());
  const long long hi = std::max(a.end(), b.end());
  std::vector<FieldElement> out;
  out.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (long long n = lo; n <= hi; ++n) out.push_back(a.at(n) + b.at(n));
  return VectorSignal(lo, std::move(out));
}

VectorSignal operator-(const VectorSignal& a, const VectorSignal& b) {
  require_same_field(a, b);
  const long long lo = std::min(a.start(), b.start());
  const long long hi = std::max(a.end(), b.end());
  std::vector<FieldElement> out;
  out.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (long long n = lo; n <= hi; ++n) out.push_back(a.at(n) - b.at(n));
  return VectorSignal(lo, std::move(out));
}

std::vector<VectorSignal> gram_schmidt(const std::vector<VectorSignal>& in) {
  std::vector<VectorSignal> out;
  out.reserve(in.size());
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (i > 0) {
      require_same_field(in[0], in[i]);
      if (in[i].length() != in[0].length()) {
        throw parse_error("gram_schmidt needs signals of equal length");
      }
    }
    VectorSignal v = in[i];
    for (const VectorSignal& prev : out) {
      if (prev.is_zero()) continue;
      const FieldElement norm_sq = signal_inner(prev, prev);
      // A nonzero self-orthogonal signal cannot be projected against;
      // only possible when conjugation is not embedding-compatible.
      if (norm_sq.is_zero()) continue;
      const FieldElement coef = signal_inner(in[i], prev) / norm_sq;
      if (coef.is_zero()) continue;
      v = v - coef * prev;
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace qalpha
