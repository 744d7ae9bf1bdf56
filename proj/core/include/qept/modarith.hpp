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

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace qept {

using Digit = std::uint32_t;

/// An element of Z/DZ. The modulus travels with the value.
class Residue {
 public:
  Residue(std::int64_t value, Digit modulus);

  Digit value() const noexcept { return value_; }
  Digit modulus() const noexcept { return modulus_; }

  Residue operator+(const Residue& o) const;
  Residue operator-(const Residue& o) const;
  Residue operator*(const Residue& o) const;
  Residue operator-() const;
  bool operator==(const Residue& o) const noexcept = default;

 private:
  Digit value_;
  Digit modulus_;
};

/// A vector in (Z/DZ)^n.
class ResidueVector {
 public:
  ResidueVector(Digit modulus, std::size_t length);
  ResidueVector(Digit modulus, std::vector<std::int64_t> values);
  ResidueVector(Digit modulus, std::initializer_list<std::int64_t> values);

  Digit modulus() const noexcept { return modulus_; }
  std::size_t size() const noexcept { return values_.size(); }
  Digit operator[](std::size_t i) const { return values_[i]; }
  Residue at(std::size_t i) const;
  void set(std::size_t i, std::int64_t value);
  const std::vector<Digit>& values() const noexcept { return values_; }

  ResidueVector operator+(const ResidueVector& o) const;
  ResidueVector operator-(const ResidueVector& o) const;
  ResidueVector operator*(Digit scalar) const;
  Residue dot(const ResidueVector& o) const;
  bool operator==(const ResidueVector& o) const noexcept = default;

 private:
  void check_compatible(const ResidueVector& o) const;

  Digit modulus_;
  std::vector<Digit> values_;
};

/// Reduces any signed integer into [0, D).
Digit reduce(std::int64_t value, Digit modulus) noexcept;

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept;
bool is_prime(std::uint64_t value) noexcept;

/// Multiplicative inverse. Throws NotInvertible when gcd(x, D) != 1.
Residue inverse(const Residue& x);
Digit inverse_mod(std::int64_t x, Digit modulus);

/// x^e mod D with 0^0 = 1.
Residue pow(const Residue& x, std::uint64_t exponent);
Digit pow_mod(std::int64_t x, std::uint64_t exponent, Digit modulus) noexcept;

/// Evaluates lambda_0 + lambda_1 x + ... at x.
Residue evaluate_polynomial(const ResidueVector& coeffs, const Residue& x);

/// Coefficients of the unique polynomial of degree < d through the given
/// points. Requires a prime modulus and distinct points.
ResidueVector vandermonde_solve(const ResidueVector& points,
                                const ResidueVector& evals);

}  // namespace qept
