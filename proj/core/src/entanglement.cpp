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


#include "qept/entanglement.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "qept/error.hpp"

namespace qept {

namespace {

using cd = std::complex<double>;

cd omega(std::uint64_t k, Digit D) {
  const double angle = 2.0 * std::numbers::pi * double(k % D) / D;
  return {std::cos(angle), std::sin(angle)};
}

double trace_norm_dense(const BellDiagonalState& state) {
  const Digit D = state.modulus();
  const Eigen::MatrixXcd rho = density_matrix(state);
  const std::size_t dim = std::size_t{D} * D;
  Eigen::MatrixXcd pt(dim, dim);
  for (std::size_t j = 0; j < D; ++j) {
    for (std::size_t k = 0; k < D; ++k) {
      for (std::size_t jp = 0; jp < D; ++jp) {
        for (std::size_t kp = 0; kp < D; ++kp) {
          pt(j * D + k, jp * D + kp) = rho(jp * D + k, j * D + kp);
        }
      }
    }
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(pt, Eigen::EigenvaluesOnly);
  return eig.eigenvalues().cwiseAbs().sum();
}

// The partial transpose splits into D blocks labelled by sigma. With the
// weights relabelled as q[s][-r] = p[r][s] and qh_a(t) = sum_b q[a][b] w^{tb},
// block sigma has entries qh_{sigma-k-j}(j-k) / D. For odd D all blocks share
// one spectrum, so block 0 is enough.
double trace_norm_fast(const BellDiagonalState& state) {
  const Digit D = state.modulus();
  std::vector<double> q(std::size_t{D} * D, 0.0);
  for (Digit r = 0; r < D; ++r) {
    for (Digit s = 0; s < D; ++s) {
      q[std::size_t{s} * D + (D - r) % D] += state.weight(r, s);
    }
  }
  std::vector<cd> qh(std::size_t{D} * D);
  for (Digit a = 0; a < D; ++a) {
    for (Digit t = 0; t < D; ++t) {
      cd acc = 0.0;
      for (Digit b = 0; b < D; ++b) {
        const double w = q[std::size_t{a} * D + b];
        if (w != 0.0) acc += w * omega(std::uint64_t{t} * b, D);
      }
      qh[std::size_t{a} * D + t] = acc;
    }
  }
  const Digit blocks = (D % 2 == 1) ? 1 : D;
  double norm = 0.0;
  Eigen::MatrixXcd m(D, D);
  for (Digit sigma = 0; sigma < blocks; ++sigma) {
    for (Digit k = 0; k < D; ++k) {
      for (Digit j = 0; j < D; ++j) {
        const Digit a = static_cast<Digit>((2 * std::uint64_t{D} + sigma - k - j) % D);
        const Digit t = static_cast<Digit>((std::uint64_t{D} + j - k) % D);
        m(k, j) = qh[std::size_t{a} * D + t] / double(D);
      }
    }
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(m, Eigen::EigenvaluesOnly);
    norm += eig.eigenvalues().cwiseAbs().sum();
  }
  return (D % 2 == 1) ? norm * D : norm;
}

}  // namespace

BellDiagonalState::BellDiagonalState(Digit modulus, std::vector<double> weights)
    : D_(modulus), weights_(std::move(weights)) {
  if (D_ < 2) throw Error(ErrorCode::OutOfRange, "D must be at least 2");
  if (weights_.size() != std::size_t{D_} * D_) {
    throw Error(ErrorCode::ShapeMismatch, "Bell-diagonal weights need D*D entries");
  }
  double sum = 0.0;
  for (double w : weights_) {
    if (!(w >= 0.0)) throw Error(ErrorCode::InvalidArgument, "negative weight");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw Error(ErrorCode::InvalidArgument, "weights sum to " + std::to_string(sum));
  }
}

BellDiagonalState::BellDiagonalState(const CosetStatistics& stats)
    : BellDiagonalState(stats.modulus(), stats.table()) {}

double fidelity(const BellDiagonalState& state) {
  return std::sqrt(state.weight(0, 0));
}

Eigen::MatrixXcd density_matrix(const BellDiagonalState& state,
                                std::size_t max_dimension) {
  const Digit D = state.modulus();
  if (D > max_dimension) {
    throw Error(ErrorCode::DenseCapExceeded,
                "D = " + std::to_string(D) + " exceeds " + std::to_string(max_dimension));
  }
  const std::size_t dim = std::size_t{D} * D;
  // Column (r,s) holds sqrt(p_{r,s}) (1 (x) X^r Z^s)|Psi>.
  Eigen::MatrixXcd v = Eigen::MatrixXcd::Zero(dim, dim);
  for (Digit r = 0; r < D; ++r) {
    for (Digit s = 0; s < D; ++s) {
      const double w = state.weight(r, s);
      if (w == 0.0) continue;
      const double amp = std::sqrt(w) / D;
      const std::size_t col = std::size_t{r} * D + s;
      for (Digit j = 0; j < D; ++j) {
        for (Digit k = 0; k < D; ++k) {
          const std::uint64_t phase = std::uint64_t{j} * k + std::uint64_t{s} * k;
          v(std::size_t{j} * D + (k + r) % D, col) = amp * omega(phase, D);
        }
      }
    }
  }
  return v * v.adjoint();
}

double partial_transpose_trace_norm(const BellDiagonalState& state,
                                    NegativityMethod method) {
  return method == NegativityMethod::Dense ? trace_norm_dense(state)
                                           : trace_norm_fast(state);
}

double log_negativity(const BellDiagonalState& state, NegativityMethod method) {
  return std::max(0.0, std::log2(partial_transpose_trace_norm(state, method)));
}

}  // namespace qept
