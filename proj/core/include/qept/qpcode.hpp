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
#include <utility>
#include <vector>

#include "qept/modarith.hpp"
#include "qept/pauli.hpp"

namespace qept {

/// [[2d-1, 1, d]]_D quantum polynomial code with evaluation points 0..n-1.
class QuantumPolynomialCode {
 public:
  /// Requires D prime and 1 <= d <= (D+1)/2; throws InvalidCode otherwise.
  QuantumPolynomialCode(Digit modulus, std::size_t distance);

  Digit modulus() const noexcept { return modulus_; }
  std::size_t distance() const noexcept { return d_; }
  std::size_t length() const noexcept { return 2 * d_ - 1; }
  std::size_t correctable() const noexcept { return (d_ - 1) / 2; }
  /// d = (D+1)/2, i.e. n = D: every field element is an evaluation point.
  bool is_maximal() const noexcept { return 2 * d_ == modulus_ + 1; }

 private:
  Digit modulus_;
  std::size_t d_;
};

/// (d-1) x n matrix with rows h_j = (k^j)_k, 0^0 = 1. Row-major.
std::vector<ResidueVector> parity_check_matrix(const QuantumPolynomialCode& code);

/// X^{h_j} and Z^{h_j} for every parity-check row. Maximal codes only.
std::vector<PauliLabel> stabilizer_generators(const QuantumPolynomialCode& code);

/// X_L = X^i and Z_L = Z^{-i} with i = (k^{d-1})_k. Maximal codes only.
std::pair<PauliLabel, PauliLabel> logical_operators(const QuantumPolynomialCode& code);

/// Evaluation vector (f(0), ..., f(n-1)) of the given coefficients.
ResidueVector evaluate(const QuantumPolynomialCode& code, const ResidueVector& coeffs);

/// Logical basis state |a_L>: uniform superposition of evaluation vectors of
/// degree-(d-1) polynomials with leading coefficient a.
Eigen::VectorXcd codeword_state(const QuantumPolynomialCode& code, Digit a);

/// Rebuilds the full evaluation vector from at least d known positions.
ResidueVector erasure_recover(const QuantumPolynomialCode& code,
                              const std::vector<std::size_t>& known_positions,
                              const ResidueVector& known_evals);

}  // namespace qept
