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


#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "qept/error.hpp"
#include "qept/qpcode.hpp"

namespace qept {
namespace {

TEST(QuantumPolynomialCode, Parameters) {
  const QuantumPolynomialCode c(13, 7);
  EXPECT_EQ(c.length(), 13u);
  EXPECT_EQ(c.correctable(), 3u);
  EXPECT_TRUE(c.is_maximal());
  EXPECT_FALSE(QuantumPolynomialCode(13, 3).is_maximal());
  EXPECT_THROW(QuantumPolynomialCode(4, 2), Error);
  EXPECT_THROW(QuantumPolynomialCode(5, 4), Error);
  EXPECT_THROW(QuantumPolynomialCode(5, 0), Error);
}

TEST(ParityCheck, Examples) {
  const auto h3 = parity_check_matrix(QuantumPolynomialCode(3, 2));
  ASSERT_EQ(h3.size(), 1u);
  EXPECT_EQ(h3[0], ResidueVector(3, {1, 1, 1}));
  const auto h5 = parity_check_matrix(QuantumPolynomialCode(5, 3));
  ASSERT_EQ(h5.size(), 2u);
  EXPECT_EQ(h5[0], ResidueVector(5, {1, 1, 1, 1, 1}));
  EXPECT_EQ(h5[1], ResidueVector(5, {0, 1, 2, 3, 4}));
  EXPECT_EQ(h5[0].dot(h5[1]).value(), (0 + 1 + 2 + 3 + 4) % 5u);
}

TEST(Stabilizers, Examples) {
  const auto g3 = stabilizer_generators(QuantumPolynomialCode(3, 2));
  ASSERT_EQ(g3.size(), 2u);
  EXPECT_EQ(g3[0], PauliLabel(ResidueVector(3, {1, 1, 1}), ResidueVector(3, 3)));
  EXPECT_EQ(g3[1], PauliLabel(ResidueVector(3, 3), ResidueVector(3, {1, 1, 1})));
  const auto g5 = stabilizer_generators(QuantumPolynomialCode(5, 3));
  EXPECT_EQ(g5.size(), 4u);
  try {
    stabilizer_generators(QuantumPolynomialCode(7, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnsupportedFamily);
  }
}

TEST(Logicals, Examples) {
  const auto [x3, z3] = logical_operators(QuantumPolynomialCode(3, 2));
  EXPECT_EQ(x3.x_exp(), ResidueVector(3, {0, 1, 2}));
  EXPECT_EQ(x3.x_exp().dot(x3.x_exp()).value(), 2u);
  const auto [x5, z5] = logical_operators(QuantumPolynomialCode(5, 3));
  EXPECT_EQ(x5.x_exp(), ResidueVector(5, {0, 1, 4, 4, 1}));
  EXPECT_EQ(x5.x_exp().dot(x5.x_exp()).value(), 4u);
  EXPECT_EQ(z5.z_exp(), ResidueVector(5, {0, 4, 1, 1, 4}));
  EXPECT_EQ(commutation_phase(x5, z5).value(), 4u);
  EXPECT_THROW(logical_operators(QuantumPolynomialCode(7, 3)), Error);
}

class MaximalFamily : public ::testing::TestWithParam<Digit> {};

TEST_P(MaximalFamily, CommutationStructure) {
  const Digit D = GetParam();
  const QuantumPolynomialCode code(D, (D + 1) / 2);
  const auto gens = stabilizer_generators(code);
  const auto [xl, zl] = logical_operators(code);
  EXPECT_EQ(gens.size(), 2 * (code.distance() - 1));
  for (const auto& a : gens) {
    for (const auto& b : gens) EXPECT_EQ(commutation_phase(a, b).value(), 0u);
    EXPECT_EQ(commutation_phase(a, xl).value(), 0u);
    EXPECT_EQ(commutation_phase(a, zl).value(), 0u);
  }
  EXPECT_EQ(commutation_phase(xl, zl).value(), D - 1);
  // Parity-check rows are mutually orthogonal for the maximal family.
  const auto h = parity_check_matrix(code);
  for (const auto& a : h) {
    for (const auto& b : h) EXPECT_EQ(a.dot(b).value(), 0u);
  }
  // i.i = -1, and i is invertible away from the zero point.
  const auto i = xl.x_exp();
  EXPECT_EQ(i.dot(i).value(), D - 1);
  for (std::size_t k = 1; k < i.size(); ++k) EXPECT_EQ(gcd(i[k], D), 1u);
}

INSTANTIATE_TEST_SUITE_P(SmallPrimes, MaximalFamily, ::testing::Values(3u, 5u, 7u));

TEST(CodewordState, RepetitionExample) {
  const auto psi = codeword_state(QuantumPolynomialCode(3, 2), 0);
  const double amp = 1.0 / std::sqrt(3.0);
  for (std::size_t i = 0; i < 27; ++i) {
    const bool on = i == 0 || i == 13 || i == 26;  // |000>, |111>, |222>
    EXPECT_NEAR(std::abs(psi(i) - std::complex<double>(on ? amp : 0.0)), 0.0, 1e-15);
  }
}

class CodewordChecks : public ::testing::TestWithParam<Digit> {};

TEST_P(CodewordChecks, StabilizedNormalizedOrthogonal) {
  const Digit D = GetParam();
  const QuantumPolynomialCode code(D, (D + 1) / 2);
  const auto gens = stabilizer_generators(code);
  const auto [xl, zl] = logical_operators(code);
  std::vector<Eigen::VectorXcd> states;
  for (Digit a = 0; a < D; ++a) states.push_back(codeword_state(code, a));
  for (Digit a = 0; a < D; ++a) {
    const auto& s = states[a];
    EXPECT_NEAR(s.norm(), 1.0, 1e-12);
    for (const auto& g : gens) EXPECT_LT((apply_pauli(g, s) - s).norm(), 1e-10);
    // Z_L = Z^{-i} picks up omega^{-a (i.i)} = omega^{a}.
    const double angle = 2.0 * std::numbers::pi * a / D;
    const std::complex<double> eig(std::cos(angle), std::sin(angle));
    EXPECT_LT((apply_pauli(zl, s) - eig * s).norm(), 1e-10);
    // X_L = X^i shifts the leading coefficient by one.
    EXPECT_LT((apply_pauli(xl, s) - states[(a + 1) % D]).norm(), 1e-10);
    for (Digit b = 0; b < D; ++b) {
      if (b != a) EXPECT_LT(std::abs(s.dot(states[b])), 1e-12);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(SmallPrimes, CodewordChecks, ::testing::Values(3u, 5u));

TEST(ErasureRecover, Examples) {
  const QuantumPolynomialCode code(5, 3);
  const ResidueVector word(5, {0, 1, 4, 4, 1});
  EXPECT_EQ(erasure_recover(code, {0, 1, 2, 3, 4}, word), word);
  EXPECT_EQ(erasure_recover(code, {0, 1, 2}, ResidueVector(5, {0, 1, 4})), word);
  try {
    erasure_recover(code, {0, 1}, ResidueVector(5, {0, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooFewPositions);
  }
}

TEST(ErasureRecover, InvertsEvaluationOnRandomPolynomials) {
  std::mt19937_64 rng(99);
  for (auto [D, d] : std::vector<std::pair<Digit, std::size_t>>{{5, 3}, {7, 4}, {13, 7}, {13, 4}}) {
    const QuantumPolynomialCode code(D, d);
    for (int t = 0; t < 1000; ++t) {
      std::vector<std::int64_t> c(d);
      for (auto& v : c) v = static_cast<std::int64_t>(rng() % D);
      const ResidueVector coeffs(D, c);
      const ResidueVector word = evaluate(code, coeffs);
      std::vector<std::size_t> pos(code.length());
      for (std::size_t i = 0; i < pos.size(); ++i) pos[i] = i;
      std::shuffle(pos.begin(), pos.end(), rng);
      pos.resize(d);
      std::vector<std::int64_t> vals;
      for (auto p : pos) vals.push_back(word[p]);
      ASSERT_EQ(erasure_recover(code, pos, ResidueVector(D, vals)), word);
    }
  }
}

}  // namespace
}  // namespace qept
