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
#include <cstdint>
#include <random>

#include "qept/label_table.hpp"
#include "qept/modarith.hpp"
#include "qept/pauli.hpp"

namespace qept {

/// Coefficients f_{r,s} of sum f_{r,s} (X^r Z^s) rho (X^r Z^s)^dagger.
class PauliChannelTable {
 public:
  /// Validates nonnegativity and unit total (within 1e-12).
  PauliChannelTable(Digit modulus, std::size_t n, LabelTable coeffs);

  /// The identity channel.
  static PauliChannelTable identity(Digit modulus, std::size_t n);

  Digit modulus() const noexcept { return coeffs_.modulus(); }
  std::size_t num_qudits() const noexcept { return n_; }
  const LabelTable& coeffs() const noexcept { return coeffs_; }
  double at(const PauliLabel& label) const;

 private:
  std::size_t n_;
  LabelTable coeffs_;
};

enum class Axis { XOnly, ZOnly };

/// f_{0,0} = 1 - f + f/D^{2n}, every other entry f/D^{2n}.
PauliChannelTable depolarizing(double f, Digit modulus, std::size_t n);

/// Single-qudit depolarizing along one axis only.
PauliChannelTable axis_depolarizing(double f, Axis axis, Digit modulus);

/// Independent channels on disjoint qudit blocks; a acts on the first block.
PauliChannelTable tensor_product(const PauliChannelTable& a,
                                 const PauliChannelTable& b);

/// Random full-rank density matrix: random spectrum rotated by a Haar-like
/// unitary from the QR factor of a complex Gaussian matrix.
Eigen::MatrixXcd random_density_matrix(std::size_t dim, std::mt19937_64& rng);

/// Checks numerically that the uniform Pauli mixture sends random states to
/// the maximally mixed state within 1e-10.
bool verify_depolarizing_discretization(Digit modulus, std::size_t n,
                                        int trials, std::uint64_t seed = 1);

}  // namespace qept
