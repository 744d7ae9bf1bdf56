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
#include <iosfwd>
#include <vector>

#include "qept/channels.hpp"
#include "qept/clifford.hpp"
#include "qept/label_table.hpp"
#include "qept/pauli.hpp"

namespace qept {

/// Probabilities p_{r,s} that the state carries the error X^r Z^s.
class ErrorProbabilityTensor {
 public:
  /// Validates nonnegativity and unit total.
  ErrorProbabilityTensor(Digit modulus, std::size_t n, LabelTable table);

  Digit modulus() const noexcept { return table_.modulus(); }
  std::size_t num_qudits() const noexcept { return n_; }
  const LabelTable& table() const noexcept { return table_; }
  double at(const PauliLabel& label) const;

 private:
  std::size_t n_;
  LabelTable table_;
};

/// Error-free state: p_{0,0} = 1.
ErrorProbabilityTensor identity_tensor(Digit modulus, std::size_t n);

/// Relabels entries so that p'_{forward(L)} = p_L. Inverse-direction maps are
/// turned around first.
ErrorProbabilityTensor apply_clifford(const ErrorProbabilityTensor& p,
                                      const CliffordAutomorphism& autom);

/// Group convolution p'_{L} = sum_K f_{L-K} p_K with a channel on all qudits.
ErrorProbabilityTensor apply_channel(const ErrorProbabilityTensor& p,
                                     const PauliChannelTable& f);
/// Same, with a k-qudit channel acting on the given qudits.
ErrorProbabilityTensor apply_channel(const ErrorProbabilityTensor& p,
                                     const PauliChannelTable& f,
                                     const std::vector<std::size_t>& qudits);

/// Result of measuring one qudit in the computational basis: a joint table
/// over (flip, remaining label), where flip = r_i shifts the outcome.
class MeasuredTensor {
 public:
  MeasuredTensor(Digit modulus, std::size_t remaining_qudits, LabelTable joint);

  Digit modulus() const noexcept { return joint_.modulus(); }
  std::size_t remaining_qudits() const noexcept { return n_; }
  /// Digits: flip, then r and s of the remaining qudits.
  const LabelTable& joint() const noexcept { return joint_; }

  std::vector<double> flip_distribution() const;
  ErrorProbabilityTensor remaining() const;

 private:
  std::size_t n_;
  LabelTable joint_;
};

MeasuredTensor measure_qudit(const ErrorProbabilityTensor& p, std::size_t qudit);

/// Measures qudit i but keeps its wire: s_i is summed out and set to 0 while
/// r_i survives as the flip on the recorded outcome.
ErrorProbabilityTensor contract_phase_index(const ErrorProbabilityTensor& p,
                                            std::size_t qudit);

/// Marginal on the first `keep` qudits.
ErrorProbabilityTensor discard_qudits(const ErrorProbabilityTensor& p,
                                      std::size_t keep);
/// Marginal after removing the listed qudits; the rest keep their order.
ErrorProbabilityTensor discard_qudits_at(const ErrorProbabilityTensor& p,
                                         const std::vector<std::size_t>& qudits);

/// Appends error-free qudits at the end.
ErrorProbabilityTensor append_qudits(const ErrorProbabilityTensor& p,
                                     std::size_t count);

/// Commuting generators of a stabilizer group.
class StabilizerBasis {
 public:
  StabilizerBasis(Digit modulus, std::size_t n, std::vector<PauliLabel> generators);

  Digit modulus() const noexcept { return modulus_; }
  std::size_t num_qudits() const noexcept { return n_; }
  const std::vector<PauliLabel>& generators() const noexcept { return generators_; }

 private:
  Digit modulus_;
  std::size_t n_;
  std::vector<PauliLabel> generators_;
};

/// X (x) Z and Z (x) X, the stabilizer of sum_{jk} omega^{jk} |j>|k> / D.
StabilizerBasis bell_stabilizer(Digit modulus);

/// Probabilities summed over cosets of the stabilizer span, keyed by the
/// lexicographically smallest member of each coset.
class CosetTable {
 public:
  CosetTable(StabilizerBasis basis, std::vector<std::vector<Digit>> span,
             LabelTable table);

  const StabilizerBasis& basis() const noexcept { return basis_; }
  const LabelTable& table() const noexcept { return table_; }
  std::size_t span_size() const noexcept { return span_.size(); }

  PauliLabel canonical(const PauliLabel& label) const;
  /// Probability of the coset containing `label`.
  double coset_probability(const PauliLabel& label) const;

 private:
  StabilizerBasis basis_;
  std::vector<std::vector<Digit>> span_;
  LabelTable table_;
};

CosetTable coset_reduce(const ErrorProbabilityTensor& p, const StabilizerBasis& s);

/// D x D table q[r * D + s] = probability of the coset of
/// ((0, r), (0, s)) for a two-qudit Bell-stabilizer reduction.
std::vector<double> bell_parameters(const CosetTable& reduced);

/// sum_L p_L M(L) rho M(L)^dagger.
Eigen::MatrixXcd to_dense_channel_matrix(const ErrorProbabilityTensor& p,
                                         const Eigen::MatrixXcd& rho);

/// CSV with header r_1..r_n,s_1..s_n,probability; nonzero rows only, in
/// lexicographic label order.
void write_csv(std::ostream& out, const ErrorProbabilityTensor& p);
void write_csv(std::ostream& out, const CosetTable& reduced);

}  // namespace qept
