// Copyright 2026 The qept Authors
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


#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "qept/modarith.hpp"

namespace qept {

/// Nonnegative weights indexed by digit strings in (Z/DZ)^width.
///
/// Stored as a flat array when D^width fits under dense_cap(), otherwise as
/// an ordered map whose support is bounded by the same cap. Both layouts
/// iterate in lexicographic digit order, the first digit most significant.
class LabelTable {
 public:
  LabelTable(Digit modulus, std::size_t width);

  Digit modulus() const noexcept { return modulus_; }
  std::size_t width() const noexcept { return width_; }
  bool is_dense() const noexcept { return dense_; }

  double at(const Digit* digits) const;
  double at(const std::vector<Digit>& digits) const { return at(digits.data()); }
  void add(const Digit* digits, double weight);
  void add(const std::vector<Digit>& digits, double weight) {
    add(digits.data(), weight);
  }

  /// Calls f(digits, weight) for every nonzero entry in lexicographic order.
  template <class F>
  void for_each(F&& f) const;

  double total() const;
  std::size_t support_size() const;

  /// Flat layout only.
  std::uint64_t index_of(const Digit* digits) const;
  const std::vector<double>& dense_values() const { return values_; }

 private:
  Digit modulus_;
  std::size_t width_;
  bool dense_;
  std::vector<double> values_;
  std::map<std::vector<Digit>, double> sparse_;
};

/// Largest absolute entrywise difference over the union of supports.
double max_abs_difference(const LabelTable& a, const LabelTable& b);

template <class F>
void LabelTable::for_each(F&& f) const {
  if (!dense_) {
    for (const auto& [digits, w] : sparse_) {
      if (w != 0.0) f(digits, w);
    }
    return;
  }
  std::vector<Digit> digits(width_, 0);
  for (std::size_t idx = 0; idx < values_.size(); ++idx) {
    if (values_[idx] != 0.0) f(static_cast<const std::vector<Digit>&>(digits), values_[idx]);
    for (std::size_t i = width_; i-- > 0;) {
      if (++digits[i] < modulus_) break;
      digits[i] = 0;
    }
  }
}

}  // namespace qept
