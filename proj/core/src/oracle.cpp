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


#include "qept/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "qept/pauli.hpp"

namespace qept::oracle {

std::vector<Step> random_circuit(Digit D, std::size_t n, std::size_t length,
                                 std::mt19937_64& rng) {
  std::uniform_real_distribution<double> prob(0.0, 1.0);
  std::vector<Step> steps;
  auto pick = [&](std::size_t bound) { return static_cast<std::size_t>(rng() % bound); };
  while (steps.size() < length) {
    const std::size_t kind = pick(7);
    const std::size_t q = pick(n);
    if (kind == 0) {
      steps.emplace_back(GateSpec{Fourier{q}});
    } else if (kind == 1) {
      std::int64_t l = 1 + static_cast<std::int64_t>(pick(D - 1));
      while (gcd(static_cast<std::uint64_t>(l), D) != 1) l = 1 + static_cast<std::int64_t>(pick(D - 1));
      steps.emplace_back(GateSpec{MultiplyBy{l, q}});
    } else if (kind == 2 || kind == 3) {
      if (n < 2) continue;
      std::size_t t = pick(n - 1);
      if (t >= q) ++t;
      const auto e = static_cast<std::int64_t>(1 + pick(D - 1));
      steps.emplace_back(kind == 2 ? controlled_x(q, t, e) : controlled_z(q, t, e));
    } else if (kind == 4) {
      // Joint depolarizing on one or two qudits.
      if (n >= 2 && pick(2) == 0) {
        std::size_t t = pick(n - 1);
        if (t >= q) ++t;
        steps.emplace_back(NoiseStep{depolarizing(prob(rng), D, 2), {q, t}});
      } else {
        steps.emplace_back(NoiseStep{depolarizing(prob(rng), D, 1), {q}});
      }
    } else {
      const Axis axis = kind == 5 ? Axis::XOnly : Axis::ZOnly;
      steps.emplace_back(NoiseStep{axis_depolarizing(prob(rng), axis, D), {q}});
    }
  }
  return steps;
}

std::vector<GateSpec> library_gates(Digit D, std::size_t n) {
  std::vector<GateSpec> gates;
  for (std::size_t q = 0; q < n; ++q) {
    gates.emplace_back(Fourier{q});
    for (Digit l = 1; l < D; ++l) {
      if (gcd(l, D) == 1) gates.emplace_back(MultiplyBy{static_cast<std::int64_t>(l), q});
    }
    gates.emplace_back(PauliGate{PauliLabel::single(D, n, q, 1, D - 1)});
  }
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t t = 0; t < n; ++t) {
      if (c == t) continue;
      for (Digit e = 1; e < D; ++e) {
        gates.push_back(controlled_x(c, t, e));
        gates.push_back(controlled_z(c, t, e));
      }
    }
  }
  if (n >= 3) {
    gates.emplace_back(CPauliSeq{{1, static_cast<std::int64_t>(D - 1)},
                                 {static_cast<std::int64_t>(D - 1), 1}, 0, {1, 2}});
  }
  return gates;
}

PauliLabel embed(const std::vector<Digit>& local, const std::vector<std::size_t>& qudits,
                 Digit D, std::size_t n) {
  PauliLabel out(D, n);
  const std::size_t k = qudits.size();
  for (std::size_t i = 0; i < k; ++i) {
    out.set_x(qudits[i], local[i]);
    out.set_z(qudits[i], local[k + i]);
  }
  return out;
}

ErrorProbabilityTensor run_tensor(const std::vector<Step>& steps, Digit D, std::size_t n) {
  auto p = identity_tensor(D, n);
  for (const auto& step : steps) {
    if (const auto* g = std::get_if<GateSpec>(&step)) {
      p = apply_clifford(p, automorphism_of(*g, D, n));
    } else {
      const auto& noise = std::get<NoiseStep>(step);
      p = apply_channel(p, noise.channel, noise.qudits);
    }
  }
  return p;
}

std::pair<Eigen::MatrixXcd, Eigen::MatrixXcd> run_dense(const std::vector<Step>& steps,
                                                        Digit D, std::size_t n,
                                                        const Eigen::MatrixXcd& rho) {
  Eigen::MatrixXcd noisy = rho, ideal = rho;
  for (const auto& step : steps) {
    if (const auto* g = std::get_if<GateSpec>(&step)) {
      const Eigen::MatrixXcd u = gate_unitary(*g, D, n);
      noisy = u * noisy * u.adjoint();
      ideal = u * ideal * u.adjoint();
    } else {
      const auto& noise = std::get<NoiseStep>(step);
      Eigen::MatrixXcd next = Eigen::MatrixXcd::Zero(noisy.rows(), noisy.cols());
      noise.channel.coeffs().for_each([&](const std::vector<Digit>& d, double w) {
        const Eigen::MatrixXcd m = to_matrix(embed(d, noise.qudits, D, n));
        next += w * m * noisy * m.adjoint();
      });
      noisy = next;
    }
  }
  return {noisy, ideal};
}

double circuit_discrepancy(const std::vector<Step>& steps, Digit D, std::size_t n,
                           int states, std::mt19937_64& rng) {
  const auto p = run_tensor(steps, D, n);
  double worst = 0.0;
  const auto dim = static_cast<std::size_t>(std::llround(std::pow(D, n)));
  for (int i = 0; i < states; ++i) {
    const Eigen::MatrixXcd rho = random_density_matrix(dim, rng);
    const auto [noisy, ideal] = run_dense(steps, D, n, rho);
    worst = std::max(worst, (to_dense_channel_matrix(p, ideal) - noisy).cwiseAbs().maxCoeff());
  }
  return worst;
}

}  // namespace qept::oracle
