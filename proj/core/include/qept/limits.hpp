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

#include <cstdint>

namespace qept {

// Process-wide size limits. Reads and writes are atomic.

/// Largest label space D^{2n} stored as a flat array; also bounds the support
/// of sparse tables. Default 2^24.
std::uint64_t dense_cap() noexcept;
void set_dense_cap(std::uint64_t cap) noexcept;

/// Largest Hilbert-space dimension D^n for which dense matrix oracles run.
/// Default 4096.
std::uint64_t oracle_cap() noexcept;
void set_oracle_cap(std::uint64_t cap) noexcept;

/// Largest number of span elements enumerated by coset reduction. Default 2^20.
std::uint64_t span_cap() noexcept;
void set_span_cap(std::uint64_t cap) noexcept;

/// Returns base^exp, or 0 if the result exceeds `limit`.
std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp,
                          std::uint64_t limit) noexcept;

}  // namespace qept
