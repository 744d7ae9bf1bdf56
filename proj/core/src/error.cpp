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

#include "qept/error.hpp"

#include <atomic>

#include "qept/limits.hpp"

namespace qept {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::DuplicatePoint: return "DuplicatePoint";
    case ErrorCode::NonPrimeModulus: return "NonPrimeModulus";
    case ErrorCode::ModulusMismatch: return "ModulusMismatch";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::DirectionMismatch: return "DirectionMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::IllegalMultiplier: return "IllegalMultiplier";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NonCommutingGenerators: return "NonCommutingGenerators";
    case ErrorCode::InvalidCode: return "InvalidCode";
    case ErrorCode::UnsupportedFamily: return "UnsupportedFamily";
    case ErrorCode::TooFewPositions: return "TooFewPositions";
    case ErrorCode::OddN: return "OddN";
    case ErrorCode::NoEncoding: return "NoEncoding";
    case ErrorCode::ThresholdExceedsDistance: return "ThresholdExceedsDistance";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IllegalInstruction: return "IllegalInstruction";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::OracleCapExceeded: return "OracleCapExceeded";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::SpanTooLarge: return "SpanTooLarge";
    case ErrorCode::BruteForceCapExceeded: return "BruteForceCapExceeded";
    case ErrorCode::DenseCapExceeded: return "DenseCapExceeded";
  }
  return "Unknown";
}

bool is_cap_error(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::OracleCapExceeded:
    case ErrorCode::CapExceeded:
    case ErrorCode::SpanTooLarge:
    case ErrorCode::BruteForceCapExceeded:
    case ErrorCode::DenseCapExceeded:
      return true;
    default:
      return false;
  }
}

namespace {
std::atomic<std::uint64_t> g_dense_cap{std::uint64_t{1} << 24};
std::atomic<std::uint64_t> g_oracle_cap{4096};
std::atomic<std::uint64_t> g_span_cap{std::uint64_t{1} << 20};
}  // namespace

std::uint64_t dense_cap() noexcept { return g_dense_cap.load(); }
void set_dense_cap(std::uint64_t cap) noexcept { g_dense_cap.store(cap); }
std::uint64_t oracle_cap() noexcept { return g_oracle_cap.load(); }
void set_oracle_cap(std::uint64_t cap) noexcept { g_oracle_cap.store(cap); }
std::uint64_t span_cap() noexcept { return g_span_cap.load(); }
void set_span_cap(std::uint64_t cap) noexcept { g_span_cap.store(cap); }

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp,
                          std::uint64_t limit) noexcept {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && result > limit / base) return 0;
    result *= base;
  }
  return result > limit ? 0 : result;
}

}  // namespace qept
