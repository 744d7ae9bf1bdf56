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
#include <string>
#include <string_view>
#include <vector>

#include "qept/modarith.hpp"

namespace qept {

/// Exponent label (r, s) of X^r Z^s on n qudits. Digits are stored as
/// r_0..r_{n-1} followed by s_0..s_{n-1}.
class PauliLabel {
 public:
  /// Identity label.
  PauliLabel(Digit modulus, std::size_t n);
  PauliLabel(const ResidueVector& x_exp, const ResidueVector& z_exp);

  static PauliLabel from_digits(Digit modulus, std::vector<Digit> digits);
  static PauliLabel single(Digit modulus, std::size_t n, std::size_t qudit,
                           std::int64_t r, std::int64_t s);

  Digit modulus() const noexcept { return modulus_; }
  std::size_t num_qudits() const noexcept { return digits_.size() / 2; }
  Digit x(std::size_t q) const { return digits_[q]; }
  Digit z(std::size_t q) const { return digits_[num_qudits() + q]; }
  void set_x(std::size_t q, std::int64_t v);
  void set_z(std::size_t q, std::int64_t v);
  ResidueVector x_exp() const;
  ResidueVector z_exp() const;
  const std::vector<Digit>& digits() const noexcept { return digits_; }
  bool is_identity() const noexcept;

  /// Label of the product, ignoring phase.
  PauliLabel operator+(const PauliLabel& o) const;
  PauliLabel operator-() const;
  PauliLabel scaled(Digit c) const;

  bool operator==(const PauliLabel& o) const noexcept = default;
  bool operator<(const PauliLabel& o) const noexcept {
    return digits_ < o.digits_;
  }

 private:
  PauliLabel() = default;
  Digit modulus_ = 2;
  std::vector<Digit> digits_;
};

/// omega^phase * X^r Z^s.
struct PhasedPauli {
  PauliLabel label;
  Residue phase_exp;
};

/// Exact product, tracking the omega power picked up by reordering.
PhasedPauli multiply(const PhasedPauli& a, const PhasedPauli& b);

/// t with (X^r Z^s)(X^r' Z^s') = omega^t (X^r' Z^s')(X^r Z^s); t = r'.s - r.s'.
Residue commutation_phase(const PauliLabel& a, const PauliLabel& b);

/// Dense matrix sum_k omega^{k.s} |k+r><k|. Qudit 0 is the most significant
/// digit of the basis index.
Eigen::MatrixXcd to_matrix(const PauliLabel& label);
Eigen::MatrixXcd to_matrix(const PhasedPauli& op);

/// M(label) * state without forming the matrix.
Eigen::VectorXcd apply_pauli(const PauliLabel& label, const Eigen::VectorXcd& state);

/// Hilbert space dimension D^n, checked against the oracle cap.
std::size_t oracle_dimension(Digit modulus, std::size_t n);

/// "X2Z1@q0 * X0Z3@q2", or "I" for the identity.
std::string to_string(const PauliLabel& label);
PauliLabel parse_pauli(std::string_view text, Digit modulus, std::size_t n);

}  // namespace qept
