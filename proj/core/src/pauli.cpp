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

#include "qept/pauli.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "qept/error.hpp"
#include "qept/limits.hpp"

namespace qept {

namespace {

void check_shape(const PauliLabel& a, const PauliLabel& b) {
  if (a.modulus() != b.modulus()) {
    throw Error(ErrorCode::ModulusMismatch, "labels over different moduli");
  }
  if (a.num_qudits() != b.num_qudits()) {
    throw Error(ErrorCode::ShapeMismatch, "labels on different qudit counts");
  }
}

std::complex<double> omega_pow(std::uint64_t k, Digit D) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(k % D) / D;
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace

PauliLabel::PauliLabel(Digit modulus, std::size_t n)
    : modulus_(modulus), digits_(2 * n, 0) {
  if (modulus < 2) throw Error(ErrorCode::InvalidArgument, "modulus < 2");
}

PauliLabel::PauliLabel(const ResidueVector& x_exp, const ResidueVector& z_exp)
    : modulus_(x_exp.modulus()) {
  if (x_exp.modulus() != z_exp.modulus()) {
    throw Error(ErrorCode::ModulusMismatch, "x and z exponents");
  }
  if (x_exp.size() != z_exp.size()) {
    throw Error(ErrorCode::ShapeMismatch, "x and z exponents differ in length");
  }
  digits_ = x_exp.values();
  digits_.insert(digits_.end(), z_exp.values().begin(), z_exp.values().end());
}

PauliLabel PauliLabel::from_digits(Digit modulus, std::vector<Digit> digits) {
  if (modulus < 2) throw Error(ErrorCode::InvalidArgument, "modulus < 2");
  if (digits.size() % 2 != 0) {
    throw Error(ErrorCode::ShapeMismatch, "odd digit count");
  }
  PauliLabel out;
  out.modulus_ = modulus;
  for (auto& d : digits) d %= modulus;
  out.digits_ = std::move(digits);
  return out;
}

PauliLabel PauliLabel::single(Digit modulus, std::size_t n, std::size_t qudit,
                              std::int64_t r, std::int64_t s) {
  if (qudit >= n) throw Error(ErrorCode::IndexOutOfRange, "qudit index");
  PauliLabel out(modulus, n);
  out.set_x(qudit, r);
  out.set_z(qudit, s);
  return out;
}

void PauliLabel::set_x(std::size_t q, std::int64_t v) {
  if (q >= num_qudits()) throw Error(ErrorCode::IndexOutOfRange, "qudit index");
  digits_[q] = reduce(v, modulus_);
}

void PauliLabel::set_z(std::size_t q, std::int64_t v) {
  if (q >= num_qudits()) throw Error(ErrorCode::IndexOutOfRange, "qudit index");
  digits_[num_qudits() + q] = reduce(v, modulus_);
}

ResidueVector PauliLabel::x_exp() const {
  const std::size_t n = num_qudits();
  return ResidueVector(modulus_, std::vector<std::int64_t>(
                                     digits_.begin(), digits_.begin() + n));
}

ResidueVector PauliLabel::z_exp() const {
  const std::size_t n = num_qudits();
  return ResidueVector(modulus_, std::vector<std::int64_t>(
                                     digits_.begin() + n, digits_.end()));
}

bool PauliLabel::is_identity() const noexcept {
  for (auto d : digits_) {
    if (d != 0) return false;
  }
  return true;
}

PauliLabel PauliLabel::operator+(const PauliLabel& o) const {
  check_shape(*this, o);
  PauliLabel out = *this;
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    out.digits_[i] = (digits_[i] + o.digits_[i]) % modulus_;
  }
  return out;
}

PauliLabel PauliLabel::operator-() const {
  PauliLabel out = *this;
  for (auto& d : out.digits_) d = (modulus_ - d) % modulus_;
  return out;
}

PauliLabel PauliLabel::scaled(Digit c) const {
  PauliLabel out = *this;
  for (auto& d : out.digits_) {
    d = static_cast<Digit>(std::uint64_t{d} * c % modulus_);
  }
  return out;
}

PhasedPauli multiply(const PhasedPauli& a, const PhasedPauli& b) {
  check_shape(a.label, b.label);
  // Z^s X^r' = omega^{s.r'} X^r' Z^s.
  const Residue swap = a.label.z_exp().dot(b.label.x_exp());
  return {a.label + b.label, a.phase_exp + b.phase_exp + swap};
}

Residue commutation_phase(const PauliLabel& a, const PauliLabel& b) {
  check_shape(a, b);
  return b.x_exp().dot(a.z_exp()) - a.x_exp().dot(b.z_exp());
}

std::size_t oracle_dimension(Digit modulus, std::size_t n) {
  const std::uint64_t dim = checked_pow(modulus, n, oracle_cap());
  if (dim == 0) {
    throw Error(ErrorCode::OracleCapExceeded,
                std::to_string(modulus) + "^" + std::to_string(n) +
                    " exceeds the oracle cap " + std::to_string(oracle_cap()));
  }
  return static_cast<std::size_t>(dim);
}

Eigen::MatrixXcd to_matrix(const PauliLabel& label) {
  const Digit D = label.modulus();
  const std::size_t n = label.num_qudits();
  const std::size_t dim = oracle_dimension(D, n);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  std::vector<Digit> k(n, 0);
  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t rem = col;
    for (std::size_t q = n; q-- > 0;) {
      k[q] = static_cast<Digit>(rem % D);
      rem /= D;
    }
    std::uint64_t phase = 0;
    std::size_t row = 0;
    for (std::size_t q = 0; q < n; ++q) {
      phase += std::uint64_t{k[q]} * label.z(q);
      row = row * D + (k[q] + label.x(q)) % D;
    }
    m(row, col) = omega_pow(phase, D);
  }
  return m;
}

Eigen::VectorXcd apply_pauli(const PauliLabel& label, const Eigen::VectorXcd& state) {
  const Digit D = label.modulus();
  const std::size_t n = label.num_qudits();
  const std::size_t dim = oracle_dimension(D, n);
  if (static_cast<std::size_t>(state.size()) != dim) {
    throw Error(ErrorCode::ShapeMismatch, "state dimension");
  }
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(dim);
  std::vector<Digit> k(n, 0);
  for (std::size_t col = 0; col < dim; ++col) {
    std::uint64_t phase = 0;
    std::size_t row = 0;
    for (std::size_t q = 0; q < n; ++q) {
      phase += std::uint64_t{k[q]} * label.z(q);
      row = row * D + (k[q] + label.x(q)) % D;
    }
    out(row) += omega_pow(phase, D) * state(col);
    for (std::size_t q = n; q-- > 0;) {
      if (++k[q] < D) break;
      k[q] = 0;
    }
  }
  return out;
}

Eigen::MatrixXcd to_matrix(const PhasedPauli& op) {
  return omega_pow(op.phase_exp.value(), op.label.modulus()) *
         to_matrix(op.label);
}

std::string to_string(const PauliLabel& label) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t q = 0; q < label.num_qudits(); ++q) {
    if (label.x(q) == 0 && label.z(q) == 0) continue;
    if (!first) out << " * ";
    out << 'X' << label.x(q) << 'Z' << label.z(q) << "@q" << q;
    first = false;
  }
  return first ? "I" : out.str();
}

PauliLabel parse_pauli(std::string_view text, Digit modulus, std::size_t n) {
  PauliLabel out(modulus, n);
  std::string s(text);
  std::istringstream in(s);
  std::string token;
  auto fail = [&](const std::string& why) {
    return Error(ErrorCode::ParseError, "pauli '" + s + "': " + why);
  };
  bool expect_term = true;
  bool seen_any = false;
  while (in >> token) {
    if (!expect_term) {
      if (token != "*") throw fail("expected '*'");
      expect_term = true;
      continue;
    }
    expect_term = false;
    if (token == "I" && !seen_any) {
      seen_any = true;
      continue;
    }
    seen_any = true;
    unsigned long r = 0, z = 0, q = 0;
    char tail = 0;
    if (std::sscanf(token.c_str(), "X%luZ%lu@q%lu%c", &r, &z, &q, &tail) != 3) {
      throw fail("malformed term '" + token + "'");
    }
    if (q >= n) throw Error(ErrorCode::IndexOutOfRange, "qudit " + token);
    out.set_x(q, static_cast<std::int64_t>(out.x(q) + r));
    out.set_z(q, static_cast<std::int64_t>(out.z(q) + z));
  }
  if (expect_term && seen_any) throw fail("dangling '*'");
  return out;
}

}  // namespace qept
