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

#include "qept/clifford.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <utility>

#include "qept/error.hpp"
#include "qept/limits.hpp"

namespace qept {

namespace {

using Matrix = std::vector<Digit>;

Matrix identity_matrix(std::size_t size) {
  Matrix m(size * size, 0);
  for (std::size_t i = 0; i < size; ++i) m[i * size + i] = 1;
  return m;
}

Matrix multiply(const Matrix& a, const Matrix& b, std::size_t size, Digit D) {
  Matrix out(size * size, 0);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t k = 0; k < size; ++k) {
      const std::uint64_t aik = a[i * size + k];
      if (aik == 0) continue;
      for (std::size_t j = 0; j < size; ++j) {
        out[i * size + j] =
            static_cast<Digit>((out[i * size + j] + aik * b[k * size + j]) % D);
      }
    }
  }
  return out;
}

void check_qudit(std::size_t q, std::size_t n) {
  if (q >= n) {
    throw Error(ErrorCode::IndexOutOfRange,
                "qudit " + std::to_string(q) + " of " + std::to_string(n));
  }
}

std::complex<double> omega_pow(std::uint64_t k, Digit D) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(k % D) / D;
  return {std::cos(angle), std::sin(angle)};
}

void decode(std::size_t index, Digit D, std::vector<Digit>& k) {
  for (std::size_t q = k.size(); q-- > 0;) {
    k[q] = static_cast<Digit>(index % D);
    index /= D;
  }
}

std::size_t encode(const std::vector<Digit>& k, Digit D) {
  std::size_t index = 0;
  for (auto v : k) index = index * D + v;
  return index;
}

// Applies a single elementary gate to u from the left.
void left_apply_cx(Eigen::MatrixXcd& u, std::size_t c, std::size_t t,
                   Digit a, Digit D, std::size_t n) {
  const auto dim = static_cast<std::size_t>(u.rows());
  Eigen::MatrixXcd out(u.rows(), u.cols());
  std::vector<Digit> k(n);
  for (std::size_t row = 0; row < dim; ++row) {
    decode(row, D, k);
    k[t] = static_cast<Digit>((k[t] + std::uint64_t{a} * k[c]) % D);
    out.row(encode(k, D)) = u.row(row);
  }
  u.swap(out);
}

void left_apply_cz(Eigen::MatrixXcd& u, std::size_t c, std::size_t t,
                   Digit b, Digit D, std::size_t n) {
  const auto dim = static_cast<std::size_t>(u.rows());
  std::vector<Digit> k(n);
  for (std::size_t row = 0; row < dim; ++row) {
    decode(row, D, k);
    u.row(row) *= omega_pow(std::uint64_t{b} * k[c] % D * k[t], D);
  }
}

CliffordAutomorphism cx_map(std::size_t c, std::size_t t, Digit a, Digit D,
                            std::size_t n) {
  // (r_c, r_t, s_c, s_t) -> (r_c, r_t + a r_c, s_c - a s_t, s_t)
  const std::size_t w = 2 * n;
  Matrix m = identity_matrix(w);
  m[t * w + c] = (m[t * w + c] + a) % D;
  m[(n + c) * w + (n + t)] = (m[(n + c) * w + (n + t)] + D - a) % D;
  return CliffordAutomorphism(D, n, std::move(m));
}

CliffordAutomorphism cz_map(std::size_t c, std::size_t t, Digit b, Digit D,
                            std::size_t n) {
  // (r_c, r_t, s_c, s_t) -> (r_c, r_t, s_c + b r_t, s_t + b r_c)
  const std::size_t w = 2 * n;
  Matrix m = identity_matrix(w);
  m[(n + c) * w + t] = (m[(n + c) * w + t] + b) % D;
  m[(n + t) * w + c] = (m[(n + t) * w + c] + b) % D;
  return CliffordAutomorphism(D, n, std::move(m));
}

void check_cpauli(const CPauliSeq& g, std::size_t n) {
  check_qudit(g.control, n);
  if (g.a.size() != g.targets.size() || g.b.size() != g.targets.size()) {
    throw Error(ErrorCode::ShapeMismatch,
                "controlled-Pauli exponents must match the target count");
  }
  for (auto t : g.targets) {
    check_qudit(t, n);
    if (t == g.control) {
      throw Error(ErrorCode::InvalidArgument, "target equals control");
    }
  }
}

}  // namespace

std::vector<Digit> invert_matrix(const std::vector<Digit>& matrix,
                                 std::size_t size, Digit D) {
  if (matrix.size() != size * size) {
    throw Error(ErrorCode::ShapeMismatch, "matrix is not square");
  }
  Matrix a = matrix;
  Matrix inv = identity_matrix(size);
  auto row_axpy = [&](std::size_t dst, std::size_t src, std::uint64_t q) {
    // row_dst -= q * row_src
    for (std::size_t j = 0; j < size; ++j) {
      a[dst * size + j] = static_cast<Digit>(
          (a[dst * size + j] + (D - q % D) * a[src * size + j]) % D);
      inv[dst * size + j] = static_cast<Digit>(
          (inv[dst * size + j] + (D - q % D) * inv[src * size + j]) % D);
    }
  };
  auto row_swap = [&](std::size_t x, std::size_t y) {
    for (std::size_t j = 0; j < size; ++j) {
      std::swap(a[x * size + j], a[y * size + j]);
      std::swap(inv[x * size + j], inv[y * size + j]);
    }
  };
  for (std::size_t c = 0; c < size; ++c) {
    // Euclid on the column until a single nonzero entry remains below c.
    for (;;) {
      std::size_t pivot = size;
      for (std::size_t r = c; r < size; ++r) {
        const Digit v = a[r * size + c];
        if (v != 0 && (pivot == size || v < a[pivot * size + c])) pivot = r;
      }
      if (pivot == size) {
        throw Error(ErrorCode::NotInvertible, "singular label map");
      }
      bool reduced = false;
      for (std::size_t r = c; r < size; ++r) {
        if (r == pivot || a[r * size + c] == 0) continue;
        row_axpy(r, pivot, a[r * size + c] / a[pivot * size + c]);
        reduced = true;
      }
      if (!reduced) {
        row_swap(c, pivot);
        break;
      }
    }
    const Digit p = a[c * size + c];
    if (gcd(p, D) != 1) {
      throw Error(ErrorCode::NotInvertible, "determinant is not a unit");
    }
    const std::uint64_t pinv = inverse_mod(p, D);
    for (std::size_t j = 0; j < size; ++j) {
      a[c * size + j] = static_cast<Digit>(a[c * size + j] * pinv % D);
      inv[c * size + j] = static_cast<Digit>(inv[c * size + j] * pinv % D);
    }
    for (std::size_t r = 0; r < size; ++r) {
      if (r != c && a[r * size + c] != 0) row_axpy(r, c, a[r * size + c]);
    }
  }
  return inv;
}

CliffordAutomorphism::CliffordAutomorphism(Digit modulus, std::size_t n,
                                           std::vector<Digit> matrix,
                                           Direction direction)
    : modulus_(modulus), n_(n), matrix_(std::move(matrix)),
      direction_(direction) {
  if (modulus < 2) throw Error(ErrorCode::InvalidArgument, "modulus < 2");
  if (matrix_.size() != 4 * n * n) {
    throw Error(ErrorCode::ShapeMismatch, "automorphism matrix must be 2n x 2n");
  }
  for (auto& v : matrix_) v %= modulus;
  invert_matrix(matrix_, 2 * n, modulus);  // throws when singular
}

CliffordAutomorphism CliffordAutomorphism::identity(Digit modulus,
                                                    std::size_t n,
                                                    Direction direction) {
  return CliffordAutomorphism(modulus, n, identity_matrix(2 * n), direction);
}

void CliffordAutomorphism::apply_digits(const Digit* in, Digit* out) const {
  const std::size_t w = 2 * n_;
  for (std::size_t i = 0; i < w; ++i) {
    std::uint64_t acc = 0;
    const Digit* row = &matrix_[i * w];
    for (std::size_t j = 0; j < w; ++j) acc += std::uint64_t{row[j]} * in[j];
    out[i] = static_cast<Digit>(acc % modulus_);
  }
}

PauliLabel CliffordAutomorphism::apply(const PauliLabel& label) const {
  if (label.modulus() != modulus_) {
    throw Error(ErrorCode::ModulusMismatch, "label vs automorphism");
  }
  if (label.num_qudits() != n_) {
    throw Error(ErrorCode::ShapeMismatch, "label vs automorphism qudit count");
  }
  std::vector<Digit> out(2 * n_);
  apply_digits(label.digits().data(), out.data());
  return PauliLabel::from_digits(modulus_, std::move(out));
}

CliffordAutomorphism CliffordAutomorphism::inverse() const {
  return CliffordAutomorphism(modulus_, n_,
                              invert_matrix(matrix_, 2 * n_, modulus_),
                              direction_);
}

CliffordAutomorphism CliffordAutomorphism::reversed() const {
  return CliffordAutomorphism(
      modulus_, n_, invert_matrix(matrix_, 2 * n_, modulus_),
      direction_ == Direction::Forward ? Direction::Inverse : Direction::Forward);
}

CliffordAutomorphism compose(const CliffordAutomorphism& first,
                             const CliffordAutomorphism& second) {
  if (first.modulus() != second.modulus() ||
      first.num_qudits() != second.num_qudits()) {
    throw Error(ErrorCode::ShapeMismatch, "composing automorphisms of different shape");
  }
  if (first.direction() != second.direction()) {
    throw Error(ErrorCode::DirectionMismatch, "composing mixed directions");
  }
  const std::size_t w = 2 * first.num_qudits();
  const Digit D = first.modulus();
  Matrix m = first.direction() == Direction::Forward
                 ? multiply(second.matrix(), first.matrix(), w, D)
                 : multiply(first.matrix(), second.matrix(), w, D);
  return CliffordAutomorphism(D, first.num_qudits(), std::move(m),
                              first.direction());
}

GateSpec controlled_x(std::size_t control, std::size_t target, std::int64_t a) {
  return CPauliSeq{{a}, {0}, control, {target}};
}

GateSpec controlled_z(std::size_t control, std::size_t target, std::int64_t b) {
  return CPauliSeq{{0}, {b}, control, {target}};
}

CliffordAutomorphism automorphism_of(const GateSpec& gate, Digit D,
                                     std::size_t n) {
  const std::size_t w = 2 * n;
  if (const auto* g = std::get_if<Fourier>(&gate)) {
    check_qudit(g->qudit, n);
    // X^r Z^s -> X^{-s} Z^{r}
    Matrix m = identity_matrix(w);
    const std::size_t q = g->qudit;
    m[q * w + q] = 0;
    m[(n + q) * w + (n + q)] = 0;
    m[q * w + (n + q)] = D - 1;
    m[(n + q) * w + q] = 1;
    return CliffordAutomorphism(D, n, std::move(m));
  }
  if (const auto* g = std::get_if<MultiplyBy>(&gate)) {
    check_qudit(g->qudit, n);
    if (gcd(reduce(g->l, D), D) != 1) {
      throw Error(ErrorCode::IllegalMultiplier,
                  "M(" + std::to_string(g->l) + ") over Z/" + std::to_string(D));
    }
    Matrix m = identity_matrix(w);
    const std::size_t q = g->qudit;
    m[q * w + q] = reduce(g->l, D);
    m[(n + q) * w + (n + q)] = inverse_mod(g->l, D);
    return CliffordAutomorphism(D, n, std::move(m));
  }
  if (const auto* g = std::get_if<PauliGate>(&gate)) {
    if (g->label.num_qudits() != n || g->label.modulus() != D) {
      throw Error(ErrorCode::ShapeMismatch, "Pauli gate label shape");
    }
    return CliffordAutomorphism::identity(D, n);
  }
  const auto& g = std::get<CPauliSeq>(gate);
  check_cpauli(g, n);
  CliffordAutomorphism acc = CliffordAutomorphism::identity(D, n);
  for (std::size_t i = 0; i < g.targets.size(); ++i) {
    const Digit a = reduce(g.a[i], D);
    const Digit b = reduce(g.b[i], D);
    if (a != 0) acc = compose(acc, cx_map(g.control, g.targets[i], a, D, n));
    if (b != 0) acc = compose(acc, cz_map(g.control, g.targets[i], b, D, n));
  }
  return acc;
}

Eigen::MatrixXcd gate_unitary(const GateSpec& gate, Digit D, std::size_t n) {
  const std::size_t dim = oracle_dimension(D, n);
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
  std::vector<Digit> k(n);
  if (const auto* g = std::get_if<Fourier>(&gate)) {
    check_qudit(g->qudit, n);
    const double norm = 1.0 / std::sqrt(static_cast<double>(D));
    u.setZero();
    for (std::size_t col = 0; col < dim; ++col) {
      decode(col, D, k);
      const Digit kq = k[g->qudit];
      for (Digit j = 0; j < D; ++j) {
        k[g->qudit] = j;
        u(encode(k, D), col) = norm * omega_pow(std::uint64_t{j} * kq, D);
      }
    }
    return u;
  }
  if (const auto* g = std::get_if<MultiplyBy>(&gate)) {
    check_qudit(g->qudit, n);
    const Digit l = reduce(g->l, D);
    if (gcd(l, D) != 1) {
      throw Error(ErrorCode::IllegalMultiplier, "M(" + std::to_string(g->l) + ")");
    }
    u.setZero();
    for (std::size_t col = 0; col < dim; ++col) {
      decode(col, D, k);
      k[g->qudit] = static_cast<Digit>(std::uint64_t{k[g->qudit]} * l % D);
      u(encode(k, D), col) = 1.0;
    }
    return u;
  }
  if (const auto* g = std::get_if<PauliGate>(&gate)) {
    if (g->label.num_qudits() != n || g->label.modulus() != D) {
      throw Error(ErrorCode::ShapeMismatch, "Pauli gate label shape");
    }
    return to_matrix(g->label);
  }
  const auto& g = std::get<CPauliSeq>(gate);
  check_cpauli(g, n);
  for (std::size_t i = 0; i < g.targets.size(); ++i) {
    left_apply_cx(u, g.control, g.targets[i], reduce(g.a[i], D), D, n);
    left_apply_cz(u, g.control, g.targets[i], reduce(g.b[i], D), D, n);
  }
  return u;
}

bool verify_conjugation(const GateSpec& gate,
                        const CliffordAutomorphism& autom) {
  const Digit D = autom.modulus();
  const std::size_t n = autom.num_qudits();
  const std::size_t dim = oracle_dimension(D, n);
  const Eigen::MatrixXcd u = gate_unitary(gate, D, n);
  const Eigen::MatrixXcd ud = u.adjoint();
  const std::uint64_t labels = checked_pow(D, 2 * n, ~std::uint64_t{0});
  std::vector<Digit> digits(2 * n);
  for (std::uint64_t idx = 0; idx < labels; ++idx) {
    std::uint64_t rem = idx;
    for (std::size_t i = 2 * n; i-- > 0;) {
      digits[i] = static_cast<Digit>(rem % D);
      rem /= D;
    }
    const PauliLabel label = PauliLabel::from_digits(D, digits);
    const Eigen::MatrixXcd m = to_matrix(label);
    const Eigen::MatrixXcd conj =
        autom.direction() == Direction::Forward ? Eigen::MatrixXcd(u * m * ud)
                                                : Eigen::MatrixXcd(ud * m * u);
    const Eigen::MatrixXcd target = to_matrix(autom.apply(label));
    // conj = phase * target iff |Tr(target^dagger conj)| = D^n.
    const double overlap = std::abs((target.adjoint() * conj).trace());
    if (std::abs(overlap - static_cast<double>(dim)) > 1e-10 * dim) return false;
  }
  return true;
}

}  // namespace qept
