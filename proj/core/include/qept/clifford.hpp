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

#include <Eigen/Dense>
#include <cstddef>
#include <variant>
#include <vector>

#include "qept/modarith.hpp"
#include "qept/pauli.hpp"

namespace qept {

/// Forward maps send pre-gate labels to post-gate labels; Inverse maps go
/// the other way.
enum class Direction { Forward, Inverse };

/// Invertible linear map on (Z/DZ)^{2n} acting on concatenated (r, s).
class CliffordAutomorphism {
 public:
  /// Row-major 2n x 2n matrix. Throws NotInvertible for singular input.
  CliffordAutomorphism(Digit modulus, std::size_t n, std::vector<Digit> matrix,
                       Direction direction = Direction::Forward);

  static CliffordAutomorphism identity(Digit modulus, std::size_t n,
                                       Direction direction = Direction::Forward);

  Digit modulus() const noexcept { return modulus_; }
  std::size_t num_qudits() const noexcept { return n_; }
  Direction direction() const noexcept { return direction_; }
  Digit entry(std::size_t row, std::size_t col) const {
    return matrix_[row * 2 * n_ + col];
  }
  const std::vector<Digit>& matrix() const noexcept { return matrix_; }

  PauliLabel apply(const PauliLabel& label) const;
  /// out = M * in over 2n digits. out must not alias in.
  void apply_digits(const Digit* in, Digit* out) const;

  /// Matrix inverse with the same direction flag (the map of the inverse gate).
  CliffordAutomorphism inverse() const;
  /// Same gate described in the opposite direction.
  CliffordAutomorphism reversed() const;

  bool operator==(const CliffordAutomorphism& o) const noexcept = default;

 private:
  Digit modulus_;
  std::size_t n_;
  std::vector<Digit> matrix_;
  Direction direction_;
};

/// Automorphism of applying first and then second.
CliffordAutomorphism compose(const CliffordAutomorphism& first,
                             const CliffordAutomorphism& second);

/// Row-reduction inverse over Z/DZ; works for composite D.
std::vector<Digit> invert_matrix(const std::vector<Digit>& matrix,
                                 std::size_t size, Digit modulus);

struct Fourier {
  std::size_t qudit;
};

/// |k> -> |k l>.
struct MultiplyBy {
  std::int64_t l;
  std::size_t qudit;
};

struct PauliGate {
  PauliLabel label;
};

/// CX^{a_i} followed by CZ^{b_i} from control onto each targets[i], in order.
struct CPauliSeq {
  std::vector<std::int64_t> a;
  std::vector<std::int64_t> b;
  std::size_t control;
  std::vector<std::size_t> targets;
};

using GateSpec = std::variant<Fourier, MultiplyBy, PauliGate, CPauliSeq>;

GateSpec controlled_x(std::size_t control, std::size_t target,
                      std::int64_t a = 1);
GateSpec controlled_z(std::size_t control, std::size_t target,
                      std::int64_t b = 1);

/// Forward automorphism of the ideal gate on n qudits.
CliffordAutomorphism automorphism_of(const GateSpec& gate, Digit modulus,
                                     std::size_t n);

/// Dense unitary of the gate. Subject to the oracle cap.
Eigen::MatrixXcd gate_unitary(const GateSpec& gate, Digit modulus,
                              std::size_t n);

/// Checks U M(L) U^dagger against M(auto(L)) up to phase for every label.
bool verify_conjugation(const GateSpec& gate, const CliffordAutomorphism& autom);

}  // namespace qept
