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


#include "qept/qpcode.hpp"

#include <cmath>
#include <string>

#include "qept/error.hpp"

namespace qept {

namespace {

void require_maximal(const QuantumPolynomialCode& code) {
  if (!code.is_maximal()) {
    throw Error(ErrorCode::UnsupportedFamily,
                "explicit operators exist only for d = (D+1)/2; got D=" +
                    std::to_string(code.modulus()) + ", d=" +
                    std::to_string(code.distance()));
  }
}

ResidueVector power_row(const QuantumPolynomialCode& code, std::size_t j) {
  const Digit D = code.modulus();
  ResidueVector row(D, code.length());
  for (std::size_t k = 0; k < code.length(); ++k) {
    row.set(k, pow_mod(static_cast<std::int64_t>(k), j, D));
  }
  return row;
}

}  // namespace

QuantumPolynomialCode::QuantumPolynomialCode(Digit modulus, std::size_t distance)
    : modulus_(modulus), d_(distance) {
  if (!is_prime(modulus)) {
    throw Error(ErrorCode::InvalidCode, "D=" + std::to_string(modulus) + " is not prime");
  }
  if (distance < 1 || 2 * distance > std::size_t{modulus} + 1) {
    throw Error(ErrorCode::InvalidCode,
                "d=" + std::to_string(distance) + " outside [1, (D+1)/2] for D=" +
                    std::to_string(modulus));
  }
}

std::vector<ResidueVector> parity_check_matrix(const QuantumPolynomialCode& code) {
  std::vector<ResidueVector> rows;
  for (std::size_t j = 0; j + 1 < code.distance(); ++j) rows.push_back(power_row(code, j));
  return rows;
}

std::vector<PauliLabel> stabilizer_generators(const QuantumPolynomialCode& code) {
  require_maximal(code);
  const Digit D = code.modulus();
  const ResidueVector zero(D, code.length());
  std::vector<PauliLabel> out;
  for (const auto& h : parity_check_matrix(code)) {
    out.emplace_back(h, zero);
    out.emplace_back(zero, h);
  }
  return out;
}

std::pair<PauliLabel, PauliLabel> logical_operators(const QuantumPolynomialCode& code) {
  require_maximal(code);
  const Digit D = code.modulus();
  const ResidueVector zero(D, code.length());
  const ResidueVector i = power_row(code, code.distance() - 1);
  return {PauliLabel(i, zero), PauliLabel(zero, i * (D - 1))};
}

ResidueVector evaluate(const QuantumPolynomialCode& code, const ResidueVector& coeffs) {
  const Digit D = code.modulus();
  if (coeffs.modulus() != D) throw Error(ErrorCode::ModulusMismatch, "coefficients");
  ResidueVector out(D, code.length());
  for (std::size_t k = 0; k < code.length(); ++k) {
    out.set(k, evaluate_polynomial(coeffs, Residue(static_cast<std::int64_t>(k), D)).value());
  }
  return out;
}

Eigen::VectorXcd codeword_state(const QuantumPolynomialCode& code, Digit a) {
  const Digit D = code.modulus();
  const std::size_t n = code.length();
  const std::size_t d = code.distance();
  const std::size_t dim = oracle_dimension(D, n);
  Eigen::VectorXcd state = Eigen::VectorXcd::Zero(dim);
  // Free coefficients lambda_0..lambda_{d-2}; lambda_{d-1} = a.
  std::size_t combos = 1;
  for (std::size_t j = 0; j + 1 < d; ++j) combos *= D;
  const double amp = 1.0 / std::sqrt(static_cast<double>(combos));
  ResidueVector coeffs(D, d);
  coeffs.set(d - 1, a);
  for (std::size_t c = 0; c < combos; ++c) {
    std::size_t rem = c;
    for (std::size_t j = 0; j + 1 < d; ++j) {
      coeffs.set(j, static_cast<std::int64_t>(rem % D));
      rem /= D;
    }
    const ResidueVector word = evaluate(code, coeffs);
    std::size_t index = 0;
    for (std::size_t k = 0; k < n; ++k) index = index * D + word[k];
    state(index) += amp;
  }
  return state;
}

ResidueVector erasure_recover(const QuantumPolynomialCode& code,
                              const std::vector<std::size_t>& known_positions,
                              const ResidueVector& known_evals) {
  const Digit D = code.modulus();
  const std::size_t d = code.distance();
  if (known_positions.size() < d) {
    throw Error(ErrorCode::TooFewPositions,
                std::to_string(known_positions.size()) + " positions, need " +
                    std::to_string(d));
  }
  if (known_evals.size() != known_positions.size()) {
    throw Error(ErrorCode::ShapeMismatch, "positions vs evaluations");
  }
  std::vector<std::int64_t> pts, vals;
  for (std::size_t i = 0; i < d; ++i) {
    if (known_positions[i] >= code.length()) {
      throw Error(ErrorCode::IndexOutOfRange, "erasure position");
    }
    pts.push_back(static_cast<std::int64_t>(known_positions[i]));
    vals.push_back(known_evals[i]);
  }
  const ResidueVector coeffs = vandermonde_solve(ResidueVector(D, pts), ResidueVector(D, vals));
  const ResidueVector full = evaluate(code, coeffs);
  // Any further known positions must agree with the interpolant.
  for (std::size_t i = d; i < known_positions.size(); ++i) {
    if (known_positions[i] >= code.length()) {
      throw Error(ErrorCode::IndexOutOfRange, "erasure position");
    }
    if (full[known_positions[i]] != known_evals[i]) {
      throw Error(ErrorCode::InvalidArgument, "known evaluations are inconsistent");
    }
  }
  return full;
}

}  // namespace qept
