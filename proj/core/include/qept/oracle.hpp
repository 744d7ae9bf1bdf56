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

// Random Clifford-plus-Pauli-noise circuits, evaluated two ways: through the
// error probability tensor and by direct density-matrix evolution.

#include <Eigen/Dense>
#include <random>
#include <utility>
#include <variant>
#include <vector>

#include "qept/channels.hpp"
#include "qept/clifford.hpp"
#include "qept/ept.hpp"

namespace qept::oracle {

struct NoiseStep {
  PauliChannelTable channel;
  std::vector<std::size_t> qudits;
};

using Step = std::variant<GateSpec, NoiseStep>;

/// Draws F, M, CX^a, CZ^b and one- or two-qudit depolarizing, X-only and
/// Z-only noise uniformly.
std::vector<Step> random_circuit(Digit D, std::size_t n, std::size_t length,
                                 std::mt19937_64& rng);

/// Every gate kind the library offers on n >= 2 qudits: F and M(l) on each
/// qudit for every invertible l, X^r Z^s gates, CX^a and CZ^b on every
/// ordered pair for every a, b != 0, and a two-target controlled sequence
/// when n >= 3.
std::vector<GateSpec> library_gates(Digit D, std::size_t n);

/// Places a local digit string (r then s) on the given qudits.
PauliLabel embed(const std::vector<Digit>& local, const std::vector<std::size_t>& qudits,
                 Digit D, std::size_t n);

ErrorProbabilityTensor run_tensor(const std::vector<Step>& steps, Digit D, std::size_t n);

/// Returns (noisy output, ideal output) for input rho.
std::pair<Eigen::MatrixXcd, Eigen::MatrixXcd> run_dense(const std::vector<Step>& steps,
                                                        Digit D, std::size_t n,
                                                        const Eigen::MatrixXcd& rho);

/// Largest entrywise deviation between the two evaluation routes over
/// `states` random inputs.
double circuit_discrepancy(const std::vector<Step>& steps, Digit D, std::size_t n,
                           int states, std::mt19937_64& rng);

}  // namespace qept::oracle
