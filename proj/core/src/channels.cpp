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


#include "qept/channels.hpp"

#include <cmath>
#include <string>

#include "qept/error.hpp"
#include "qept/limits.hpp"

namespace qept {

namespace {

void check_probability(double f) {
  if (!(f >= 0.0 && f <= 1.0)) {
    throw Error(ErrorCode::OutOfRange,
                "probability " + std::to_string(f) + " outside [0,1]");
  }
}

LabelTable full_table(Digit D, std::size_t width) {
  LabelTable t(D, width);
  if (!t.is_dense()) {
    throw Error(ErrorCode::CapExceeded,
                "a full-support table over " + std::to_string(D) + "^" +
                    std::to_string(width) + " labels exceeds the dense cap");
  }
  return t;
}

}  // namespace

PauliChannelTable::PauliChannelTable(Digit modulus, std::size_t n,
                                     LabelTable coeffs)
    : n_(n), coeffs_(std::move(coeffs)) {
  if (coeffs_.modulus() != modulus || coeffs_.width() != 2 * n) {
    throw Error(ErrorCode::ShapeMismatch, "channel table shape");
  }
  double total = 0.0;
  std::size_t support = 0;
  coeffs_.for_each([&](const std::vector<Digit>&, double w) {
    if (w < 0.0) throw Error(ErrorCode::InvalidArgument, "negative channel weight");
    total += w;
    ++support;
  });
  // Rounding grows with the number of summands.
  if (std::abs(total - 1.0) > 1e-12 + 1e-15 * static_cast<double>(support)) {
    throw Error(ErrorCode::InvalidArgument,
                "channel weights sum to " + std::to_string(total));
  }
}

PauliChannelTable PauliChannelTable::identity(Digit modulus, std::size_t n) {
  LabelTable t(modulus, 2 * n);
  t.add(std::vector<Digit>(2 * n, 0), 1.0);
  return PauliChannelTable(modulus, n, std::move(t));
}

double PauliChannelTable::at(const PauliLabel& label) const {
  if (label.modulus() != modulus() || label.num_qudits() != n_) {
    throw Error(ErrorCode::ShapeMismatch, "label vs channel");
  }
  return coeffs_.at(label.digits());
}

PauliChannelTable depolarizing(double f, Digit D, std::size_t n) {
  check_probability(f);
  LabelTable t = full_table(D, 2 * n);
  const double share = f / std::pow(static_cast<double>(D), 2.0 * n);
  std::vector<Digit> digits(2 * n, 0);
  const std::size_t size = t.dense_values().size();
  for (std::size_t idx = 0; idx < size; ++idx) {
    t.add(digits, share + (idx == 0 ? 1.0 - f : 0.0));
    for (std::size_t i = 2 * n; i-- > 0;) {
      if (++digits[i] < D) break;
      digits[i] = 0;
    }
  }
  return PauliChannelTable(D, n, std::move(t));
}

PauliChannelTable axis_depolarizing(double f, Axis axis, Digit D) {
  check_probability(f);
  LabelTable t(D, 2);
  const double share = f / D;
  for (Digit k = 0; k < D; ++k) {
    const Digit r = axis == Axis::XOnly ? k : 0;
    const Digit s = axis == Axis::ZOnly ? k : 0;
    t.add(std::vector<Digit>{r, s}, share + (k == 0 ? 1.0 - f : 0.0));
  }
  return PauliChannelTable(D, 1, std::move(t));
}

PauliChannelTable tensor_product(const PauliChannelTable& a,
                                 const PauliChannelTable& b) {
  if (a.modulus() != b.modulus()) {
    throw Error(ErrorCode::ModulusMismatch, "tensor product of channels");
  }
  const std::size_t na = a.num_qudits(), nb = b.num_qudits();
  LabelTable t(a.modulus(), 2 * (na + nb));
  std::vector<Digit> digits(2 * (na + nb));
  a.coeffs().for_each([&](const std::vector<Digit>& da, double wa) {
    b.coeffs().for_each([&](const std::vector<Digit>& db, double wb) {
      for (std::size_t i = 0; i < na; ++i) {
        digits[i] = da[i];
        digits[na + nb + i] = da[na + i];
      }
      for (std::size_t i = 0; i < nb; ++i) {
        digits[na + i] = db[i];
        digits[2 * na + nb + i] = db[nb + i];
      }
      t.add(digits, wa * wb);
    });
  });
  return PauliChannelTable(a.modulus(), na + nb, std::move(t));
}

Eigen::MatrixXcd random_density_matrix(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::exponential_distribution<double> expo(1.0);
  Eigen::MatrixXcd g(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) g(i, j) = {gauss(rng), gauss(rng)};
  }
  const Eigen::MatrixXcd q = Eigen::HouseholderQR<Eigen::MatrixXcd>(g).householderQ();
  Eigen::VectorXd spectrum(dim);
  for (std::size_t i = 0; i < dim; ++i) spectrum(i) = expo(rng);
  spectrum /= spectrum.sum();
  return q * spectrum.cast<std::complex<double>>().asDiagonal() * q.adjoint();
}

bool verify_depolarizing_discretization(Digit D, std::size_t n, int trials,
                                        std::uint64_t seed) {
  const std::size_t dim = oracle_dimension(D, n);
  std::vector<Eigen::MatrixXcd> paulis;
  const std::uint64_t count = checked_pow(D, 2 * n, ~std::uint64_t{0});
  std::vector<Digit> digits(2 * n, 0);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    paulis.push_back(to_matrix(PauliLabel::from_digits(D, digits)));
    for (std::size_t i = 2 * n; i-- > 0;) {
      if (++digits[i] < D) break;
      digits[i] = 0;
    }
  }
  std::mt19937_64 rng(seed);
  const Eigen::MatrixXcd target =
      Eigen::MatrixXcd::Identity(dim, dim) / static_cast<double>(dim);
  for (int t = 0; t < trials; ++t) {
    const Eigen::MatrixXcd rho = random_density_matrix(dim, rng);
    Eigen::MatrixXcd mix = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto& p : paulis) mix += p * rho * p.adjoint();
    mix /= static_cast<double>(count);
    if ((mix - target).cwiseAbs().maxCoeff() > 1e-10) return false;
  }
  return true;
}

}  // namespace qept
