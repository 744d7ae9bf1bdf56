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
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qept/ept.hpp"
#include "qept/modarith.hpp"
#include "qept/pauli.hpp"

namespace qept {

// Plain-text circuit files. One instruction per line, '#' starts a comment.
//
//   DIM 3
//   QUDITS 2
//   F q0
//   M 2 q1
//   CX^2 q0 q1           # CX and CZ default to exponent 1
//   CZ q1 q0
//   PAULI X1Z0@q0
//   DEP 0.01 q0 q1       # depolarizing on one or more qudits
//   DEPX 0.02 q1         # X-only, likewise DEPZ
//   MEASX q0             # also MEASZ; removes the qudit
//   DISCARD q1
//   COSET_REDUCE X1Z0@q0 * X0Z1@q1 ; X0Z1@q0 * X1Z0@q1
//
// Qudits keep their original labels after measurements and discards.
// COSET_REDUCE must be the last instruction.

enum class Op {
  Fourier,
  Multiply,
  Pauli,
  ControlledX,
  ControlledZ,
  Depolarize,
  DepolarizeX,
  DepolarizeZ,
  MeasureX,
  MeasureZ,
  Discard,
  CosetReduce,
};

struct Instruction {
  Op op;
  std::size_t line = 0;
  /// Original qudit labels.
  std::vector<std::size_t> qudits;
  /// Multiplier of M or exponent of CX/CZ.
  std::int64_t exponent = 1;
  double probability = 0.0;
  /// PAULI label or COSET_REDUCE generators, over all original qudits.
  std::vector<PauliLabel> labels;
};

struct CircuitProgram {
  Digit D = 2;
  std::size_t n = 1;
  std::vector<Instruction> instructions;
};

/// Throws ParseError citing line and column, or IllegalInstruction.
CircuitProgram parse_circuit(std::string_view text);

struct CircuitResult {
  ErrorProbabilityTensor tensor;
  /// Original labels of the qudits left in `tensor`.
  std::vector<std::size_t> remaining;
  /// Outcome shift distribution of each measurement, in program order.
  std::vector<std::pair<std::size_t, std::vector<double>>> flips;
  std::optional<CosetTable> reduced;
};

/// Starts from the error-free tensor and applies every instruction.
CircuitResult run_circuit(const CircuitProgram& program);

/// Writes the reduced table when present, the tensor otherwise.
void write_csv(std::ostream& out, const CircuitResult& result);

}  // namespace qept
