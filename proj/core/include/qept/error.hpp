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

#include <stdexcept>
#include <string>

namespace qept {

enum class ErrorCode {
  NotInvertible,
  DuplicatePoint,
  NonPrimeModulus,
  ModulusMismatch,
  ShapeMismatch,
  DirectionMismatch,
  IndexOutOfRange,
  IllegalMultiplier,
  OutOfRange,
  InvalidArgument,
  NonCommutingGenerators,
  InvalidCode,
  UnsupportedFamily,
  TooFewPositions,
  OddN,
  NoEncoding,
  ThresholdExceedsDistance,
  ParseError,
  IllegalInstruction,
  ConfigError,
  // Size limits. The CLI maps these to exit code 2.
  OracleCapExceeded,
  CapExceeded,
  SpanTooLarge,
  BruteForceCapExceeded,
  DenseCapExceeded,
};

const char* to_string(ErrorCode code) noexcept;

/// True for the error codes that signal a size limit rather than bad input.
bool is_cap_error(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qept
