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


#include "qept/label_table.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qept/error.hpp"
#include "qept/limits.hpp"

namespace qept {

LabelTable::LabelTable(Digit modulus, std::size_t width)
    : modulus_(modulus), width_(width), dense_(false) {
  if (modulus < 2) throw Error(ErrorCode::InvalidArgument, "modulus < 2");
  const std::uint64_t size = checked_pow(modulus, width, dense_cap());
  if (size != 0) {
    dense_ = true;
    values_.assign(size, 0.0);
  }
}

std::uint64_t LabelTable::index_of(const Digit* digits) const {
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < width_; ++i) idx = idx * modulus_ + digits[i];
  return idx;
}

double LabelTable::at(const Digit* digits) const {
  for (std::size_t i = 0; i < width_; ++i) {
    if (digits[i] >= modulus_) {
      throw Error(ErrorCode::IndexOutOfRange, "digit exceeds modulus");
    }
  }
  if (dense_) return values_[index_of(digits)];
  auto it = sparse_.find(std::vector<Digit>(digits, digits + width_));
  return it == sparse_.end() ? 0.0 : it->second;
}

void LabelTable::add(const Digit* digits, double weight) {
  if (weight == 0.0) return;
  if (dense_) {
    values_[index_of(digits)] += weight;
    return;
  }
  sparse_[std::vector<Digit>(digits, digits + width_)] += weight;
  if (sparse_.size() > dense_cap()) {
    throw Error(ErrorCode::CapExceeded,
                "sparse support exceeds " + std::to_string(dense_cap()) +
                    " entries");
  }
}

double LabelTable::total() const {
  double sum = 0.0;
  for_each([&](const std::vector<Digit>&, double w) { sum += w; });
  return sum;
}

std::size_t LabelTable::support_size() const {
  std::size_t count = 0;
  for_each([&](const std::vector<Digit>&, double) { ++count; });
  return count;
}

double max_abs_difference(const LabelTable& a, const LabelTable& b) {
  if (a.modulus() != b.modulus() || a.width() != b.width()) {
    throw Error(ErrorCode::ShapeMismatch, "comparing tables of different shape");
  }
  double worst = 0.0;
  a.for_each([&](const std::vector<Digit>& d, double w) {
    worst = std::max(worst, std::abs(w - b.at(d)));
  });
  b.for_each([&](const std::vector<Digit>& d, double w) {
    worst = std::max(worst, std::abs(w - a.at(d)));
  });
  return worst;
}

}  // namespace qept
