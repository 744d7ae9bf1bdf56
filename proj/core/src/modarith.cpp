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

#include "qept/modarith.hpp"

#include <string>

#include "qept/error.hpp"

namespace qept {

namespace {

void check_modulus(Digit modulus) {
  if (modulus < 2) {
    throw Error(ErrorCode::InvalidArgument,
                "modulus must be at least 2, got " + std::to_string(modulus));
  }
}

void check_same(Digit a, Digit b) {
  if (a != b) {
    throw Error(ErrorCode::ModulusMismatch,
                std::to_string(a) + " vs " + std::to_string(b));
  }
}

}  // namespace

Digit reduce(std::int64_t value, Digit modulus) noexcept {
  std::int64_t m = static_cast<std::int64_t>(modulus);
  std::int64_t r = value % m;
  return static_cast<Digit>(r < 0 ? r + m : r);
}

Residue::Residue(std::int64_t value, Digit modulus)
    : value_(0), modulus_(modulus) {
  check_modulus(modulus);
  value_ = reduce(value, modulus);
}

Residue Residue::operator+(const Residue& o) const {
  check_same(modulus_, o.modulus_);
  return Residue(std::int64_t{value_} + o.value_, modulus_);
}

Residue Residue::operator-(const Residue& o) const {
  check_same(modulus_, o.modulus_);
  return Residue(std::int64_t{value_} - o.value_, modulus_);
}

Residue Residue::operator*(const Residue& o) const {
  check_same(modulus_, o.modulus_);
  return Residue(static_cast<std::int64_t>(std::uint64_t{value_} * o.value_ %
                                           modulus_),
                 modulus_);
}

Residue Residue::operator-() const {
  return Residue(-static_cast<std::int64_t>(value_), modulus_);
}

ResidueVector::ResidueVector(Digit modulus, std::size_t length)
    : modulus_(modulus), values_(length, 0) {
  check_modulus(modulus);
}

ResidueVector::ResidueVector(Digit modulus, std::vector<std::int64_t> values)
    : modulus_(modulus) {
  check_modulus(modulus);
  values_.reserve(values.size());
  for (auto v : values) values_.push_back(reduce(v, modulus));
}

ResidueVector::ResidueVector(Digit modulus,
                             std::initializer_list<std::int64_t> values)
    : ResidueVector(modulus, std::vector<std::int64_t>(values)) {}

Residue ResidueVector::at(std::size_t i) const {
  if (i >= values_.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "residue vector index");
  }
  return Residue(values_[i], modulus_);
}

void ResidueVector::set(std::size_t i, std::int64_t value) {
  if (i >= values_.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "residue vector index");
  }
  values_[i] = reduce(value, modulus_);
}

void ResidueVector::check_compatible(const ResidueVector& o) const {
  check_same(modulus_, o.modulus_);
  if (values_.size() != o.values_.size()) {
    throw Error(ErrorCode::ShapeMismatch, "residue vector lengths differ");
  }
}

ResidueVector ResidueVector::operator+(const ResidueVector& o) const {
  check_compatible(o);
  ResidueVector out(modulus_, values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) {
    out.values_[i] = (values_[i] + o.values_[i]) % modulus_;
  }
  return out;
}

ResidueVector ResidueVector::operator-(const ResidueVector& o) const {
  check_compatible(o);
  ResidueVector out(modulus_, values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) {
    out.values_[i] = (values_[i] + modulus_ - o.values_[i]) % modulus_;
  }
  return out;
}

ResidueVector ResidueVector::operator*(Digit scalar) const {
  ResidueVector out(modulus_, values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) {
    out.values_[i] =
        static_cast<Digit>(std::uint64_t{values_[i]} * scalar % modulus_);
  }
  return out;
}

Residue ResidueVector::dot(const ResidueVector& o) const {
  check_compatible(o);
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    acc = (acc + std::uint64_t{values_[i]} * o.values_[i]) % modulus_;
  }
  return Residue(static_cast<std::int64_t>(acc), modulus_);
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept {
  while (b != 0) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool is_prime(std::uint64_t value) noexcept {
  if (value < 2) return false;
  for (std::uint64_t p = 2; p * p <= value; ++p) {
    if (value % p == 0) return false;
  }
  return true;
}

Digit inverse_mod(std::int64_t x, Digit modulus) {
  check_modulus(modulus);
  // Extended Euclid on (x mod D, D).
  std::int64_t a = reduce(x, modulus), b = modulus;
  std::int64_t u = 1, v = 0;
  while (b != 0) {
    std::int64_t q = a / b;
    std::int64_t t = a - q * b;
    a = b;
    b = t;
    t = u - q * v;
    u = v;
    v = t;
  }
  if (a != 1) {
    throw Error(ErrorCode::NotInvertible,
                std::to_string(reduce(x, modulus)) + " mod " +
                    std::to_string(modulus));
  }
  return reduce(u, modulus);
}

Residue inverse(const Residue& x) {
  return Residue(inverse_mod(x.value(), x.modulus()), x.modulus());
}

Digit pow_mod(std::int64_t x, std::uint64_t exponent, Digit modulus) noexcept {
  std::uint64_t base = reduce(x, modulus);
  std::uint64_t result = 1 % modulus;
  while (exponent > 0) {
    if (exponent & 1) result = result * base % modulus;
    base = base * base % modulus;
    exponent >>= 1;
  }
  return static_cast<Digit>(result);
}

Residue pow(const Residue& x, std::uint64_t exponent) {
  return Residue(pow_mod(x.value(), exponent, x.modulus()), x.modulus());
}

Residue evaluate_polynomial(const ResidueVector& coeffs, const Residue& x) {
  check_same(coeffs.modulus(), x.modulus());
  const Digit D = x.modulus();
  std::uint64_t acc = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    acc = (acc * x.value() + coeffs[i]) % D;
  }
  return Residue(static_cast<std::int64_t>(acc), D);
}

ResidueVector vandermonde_solve(const ResidueVector& points,
                                const ResidueVector& evals) {
  const Digit D = points.modulus();
  check_same(D, evals.modulus());
  if (!is_prime(D)) {
    throw Error(ErrorCode::NonPrimeModulus, std::to_string(D));
  }
  const std::size_t d = points.size();
  if (evals.size() != d) {
    throw Error(ErrorCode::ShapeMismatch, "points and evals differ in length");
  }
  if (d > D) {
    throw Error(ErrorCode::InvalidArgument, "more points than field elements");
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      if (points[i] == points[j]) {
        throw Error(ErrorCode::DuplicatePoint,
                    "point " + std::to_string(points[i]) + " repeats");
      }
    }
  }

  // Lagrange interpolation: accumulate evals[i] * prod_{j!=i} (T - x_j)/(x_i - x_j).
  std::vector<std::uint64_t> coeffs(d, 0);
  std::vector<std::uint64_t> basis;
  for (std::size_t i = 0; i < d; ++i) {
    basis.assign(1, 1);
    std::uint64_t denom = 1;
    for (std::size_t j = 0; j < d; ++j) {
      if (j == i) continue;
      const std::uint64_t neg_xj = (D - points[j]) % D;
      std::vector<std::uint64_t> next(basis.size() + 1, 0);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] = (next[k + 1] + basis[k]) % D;
        next[k] = (next[k] + basis[k] * neg_xj) % D;
      }
      basis.swap(next);
      denom = denom * ((points[i] + D - points[j]) % D) % D;
    }
    const std::uint64_t scale = std::uint64_t{evals[i]} *
                                inverse_mod(static_cast<std::int64_t>(denom), D) % D;
    for (std::size_t k = 0; k < d; ++k) {
      coeffs[k] = (coeffs[k] + basis[k] * scale) % D;
    }
  }
  std::vector<std::int64_t> out(coeffs.begin(), coeffs.end());
  return ResidueVector(D, std::move(out));
}

}  // namespace qept
