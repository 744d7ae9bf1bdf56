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
#include <vector>

#include "qept/modarith.hpp"
#include "qept/repeater.hpp"

namespace qept {

/// Mixture of (1 (x) X^r Z^s)|Psi> with weights p_{r,s}, where
/// |Psi> = (1/D) sum_{j,k} w^{jk} |j>|k>.
class BellDiagonalState {
 public:
  /// `weights` has D*D entries, index r*D + s. Validates normalization.
  BellDiagonalState(Digit modulus, std::vector<double> weights);
  explicit BellDiagonalState(const CosetStatistics& stats);

  Digit modulus() const noexcept { return D_; }
  double weight(Digit r, Digit s) const { return weights_[std::size_t{r} * D_ + s]; }
  const std::vector<double>& weights() const noexcept { return weights_; }

 private:
  Digit D_;
  std::vector<double> weights_;
};

/// sqrt(p_{0,0}).
double fidelity(const BellDiagonalState& state);

/// Explicit D^2 x D^2 density matrix, qudit A first. Throws DenseCapExceeded
/// when D > max_dimension.
Eigen::MatrixXcd density_matrix(const BellDiagonalState& state,
                                std::size_t max_dimension = 31);

enum class NegativityMethod {
  /// The block spectrum below.
  Auto,
  /// D blocks of size D x D built from a Fourier transform of the weights.
  Fast,
  /// Partial transpose of density_matrix and a Hermitian eigensolver.
  Dense,
};

/// Trace norm of the partial transpose on qudit A.
double partial_transpose_trace_norm(const BellDiagonalState& state,
                                    NegativityMethod method = NegativityMethod::Auto);

/// log2 of the trace norm, clamped at 0 against rounding.
double log_negativity(const BellDiagonalState& state,
                      NegativityMethod method = NegativityMethod::Auto);

}  // namespace qept
