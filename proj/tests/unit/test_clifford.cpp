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

#include <random>

#include "qept/clifford.hpp"
#include "qept/error.hpp"

namespace qept {
namespace {

std::vector<PauliLabel> all_labels(Digit D, std::size_t n) {
  std::vector<PauliLabel> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < 2 * n; ++i) total *= D;
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::vector<Digit> digits(2 * n);
    std::size_t rem = idx;
    for (std::size_t i = 2 * n; i-- > 0;) {
      digits[i] = static_cast<Digit>(rem % D);
      rem /= D;
    }
    out.push_back(PauliLabel::from_digits(D, digits));
  }
  return out;
}

std::vector<GateSpec> library(Digit D, std::size_t n) {
  std::vector<GateSpec> gates;
  for (std::size_t q = 0; q < n; ++q) {
    gates.push_back(Fourier{q});
    for (Digit l = 1; l < D; ++l) {
      if (gcd(l, D) == 1) gates.push_back(MultiplyBy{l, q});
    }
    gates.push_back(PauliGate{PauliLabel::single(D, n, q, 1, D - 1)});
  }
  if (n >= 2) {
    for (Digit a = 0; a < D; ++a) {
      for (Digit b = 0; b < D; ++b) {
        gates.push_back(CPauliSeq{{a}, {b}, 0, {1}});
        gates.push_back(CPauliSeq{{b}, {a}, 1, {0}});
      }
    }
  }
  return gates;
}

TEST(Automorphism, PauliGateIsIdentity) {
  const auto label = PauliLabel::single(5, 1, 0, 2, 3);
  EXPECT_EQ(automorphism_of(PauliGate{label}, 5, 1),
            CliffordAutomorphism::identity(5, 1));
}

TEST(Automorphism, ControlledZSpreadsX) {
  const auto cz = automorphism_of(controlled_z(0, 1), 2, 2);
  const auto x_on_0 = PauliLabel::single(2, 2, 0, 1, 0);
  auto expected = x_on_0;
  expected.set_z(1, 1);
  EXPECT_EQ(cz.apply(x_on_0), expected);
}

TEST(Automorphism, FourierSendsXToZ) {
  const auto f = automorphism_of(Fourier{0}, 5, 1);
  EXPECT_EQ(f.apply(PauliLabel::single(5, 1, 0, 1, 0)),
            PauliLabel::single(5, 1, 0, 0, 1));
  EXPECT_EQ(f.apply(PauliLabel::single(5, 1, 0, 0, 1)),
            PauliLabel::single(5, 1, 0, 4, 0));
}

TEST(Automorphism, Errors) {
  try {
    automorphism_of(MultiplyBy{2, 0}, 4, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IllegalMultiplier);
  }
  try {
    automorphism_of(Fourier{3}, 5, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IndexOutOfRange);
  }
  EXPECT_THROW(CliffordAutomorphism(5, 1, {1, 1, 1, 1}), Error);
}

TEST(Compose, IdentityInverseAndFourthPowerOfFourier) {
  const Digit D = 7;
  const auto id = CliffordAutomorphism::identity(D, 2);
  const auto a = automorphism_of(CPauliSeq{{3}, {2}, 0, {1}}, D, 2);
  EXPECT_EQ(compose(id, a), a);
  EXPECT_EQ(compose(a, a.inverse()), id);
  EXPECT_EQ(compose(a.inverse(), a), id);

  // F^4 is a multiple of the identity as a matrix, so its map must be trivial.
  const auto u = gate_unitary(Fourier{0}, D, 1);
  const Eigen::MatrixXcd u4 = u * u * u * u;
  ASSERT_TRUE(u4.isApprox(u4(0, 0) * Eigen::MatrixXcd::Identity(D, D)));
  const auto f = automorphism_of(Fourier{0}, D, 1);
  EXPECT_EQ(compose(compose(f, f), compose(f, f)),
            CliffordAutomorphism::identity(D, 1));
}

TEST(Compose, OrderMatters) {
  const Digit D = 5;
  const auto f = automorphism_of(Fourier{0}, D, 2);
  const auto cx = automorphism_of(controlled_x(0, 1), D, 2);
  const auto both = compose(f, cx);
  for (const auto& l : all_labels(D, 2)) {
    ASSERT_EQ(both.apply(l), cx.apply(f.apply(l)));
  }
  // The reversed description maps post-gate labels back.
  const auto back = compose(f.reversed(), cx.reversed());
  for (const auto& l : all_labels(D, 2)) {
    ASSERT_EQ(back.apply(both.apply(l)), l);
  }
  try {
    compose(f, cx.reversed());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DirectionMismatch);
  }
}

TEST(VerifyConjugation, Examples) {
  EXPECT_TRUE(verify_conjugation(Fourier{0}, automorphism_of(Fourier{0}, 3, 1)));
  EXPECT_FALSE(verify_conjugation(controlled_z(0, 1),
                                  automorphism_of(controlled_x(0, 1), 2, 2)));
  EXPECT_TRUE(verify_conjugation(MultiplyBy{2, 0}, automorphism_of(MultiplyBy{2, 0}, 5, 1)));
  // A reversed map checks U^dagger M U instead.
  EXPECT_TRUE(verify_conjugation(Fourier{0}, automorphism_of(Fourier{0}, 5, 1).reversed()));
  EXPECT_FALSE(verify_conjugation(Fourier{0}, automorphism_of(Fourier{0}, 5, 1).inverse()));
}

TEST(VerifyConjugation, WholeLibrary) {
  for (Digit D : {2u, 3u, 5u}) {
    for (std::size_t n : {1u, 2u}) {
      for (const auto& g : library(D, n)) {
        ASSERT_TRUE(verify_conjugation(g, automorphism_of(g, D, n)))
            << "D=" << D << " n=" << n << " gate index " << g.index();
      }
    }
  }
}

TEST(VerifyConjugation, MultiTargetSequence) {
  const CPauliSeq g{{1, 2}, {2, 1}, 1, {0, 2}};
  EXPECT_TRUE(verify_conjugation(g, automorphism_of(g, 3, 3)));
}

TEST(Automorphism, PreservesCommutationPhase) {
  std::mt19937_64 rng(11);
  for (Digit D : {2u, 3u, 4u, 5u}) {
    for (std::size_t n : {1u, 2u}) {
      const auto labels = all_labels(D, n);
      std::vector<PauliLabel> units;
      for (std::size_t q = 0; q < n; ++q) {
        units.push_back(PauliLabel::single(D, n, q, 1, 0));
        units.push_back(PauliLabel::single(D, n, q, 0, 1));
      }
      for (const auto& g : library(D, n)) {
        const auto a = automorphism_of(g, D, n);
        const auto inv = a.inverse();
        for (const auto& x : labels) ASSERT_EQ(inv.apply(a.apply(x)), x);
        // The form is bilinear: unit vectors settle it, random pairs confirm.
        for (const auto& x : units) {
          for (const auto& y : units) {
            ASSERT_EQ(commutation_phase(a.apply(x), a.apply(y)), commutation_phase(x, y));
          }
        }
        for (int t = 0; t < 200; ++t) {
          const auto& x = labels[rng() % labels.size()];
          const auto& y = labels[rng() % labels.size()];
          ASSERT_EQ(commutation_phase(a.apply(x), a.apply(y)), commutation_phase(x, y));
        }
      }
    }
  }
}

// With both a and b nonzero the product CX^a CZ^b differs from a single
// controlled X^a Z^b by a quadratic phase, which shows up as an extra a*b*j
// in the control's Z exponent.
TEST(Automorphism, ControlledProductCarriesQuadraticTerm) {
  const Digit D = 5;
  const std::int64_t a = 2, b = 3;
  const auto m = automorphism_of(CPauliSeq{{a}, {b}, 0, {1}}, D, 2);
  for (const auto& l : all_labels(D, 2)) {
    const std::int64_t j = l.x(0), k = l.z(0), lx = l.x(1), mz = l.z(1);
    const auto out = m.apply(l);
    EXPECT_EQ(out.x(0), reduce(j, D));
    EXPECT_EQ(out.z(0), reduce(k + lx * b - mz * a + a * b * j, D));
    EXPECT_EQ(out.x(1), reduce(lx + j * a, D));
    EXPECT_EQ(out.z(1), reduce(mz + j * b, D));
  }
}

TEST(InvertMatrix, CompositeModulus) {
  std::mt19937_64 rng(7);
  const Digit D = 12;
  const std::size_t size = 4;
  // Products of elementary unimodular matrices are invertible mod 12.
  for (int trial = 0; trial < 50; ++trial) {
    auto a = CliffordAutomorphism::identity(D, 2);
    for (int step = 0; step < 6; ++step) {
      std::vector<Digit> e(size * size, 0);
      for (std::size_t i = 0; i < size; ++i) e[i * size + i] = 1;
      const std::size_t r = rng() % size, c = (r + 1 + rng() % (size - 1)) % size;
      e[r * size + c] = static_cast<Digit>(rng() % D);
      a = compose(a, CliffordAutomorphism(D, 2, e));
    }
    const auto inv = a.inverse();
    EXPECT_EQ(compose(a, inv), CliffordAutomorphism::identity(D, 2));
  }
  EXPECT_THROW(invert_matrix({2, 0, 0, 1}, 2, 4), Error);
  EXPECT_NO_THROW(invert_matrix({5, 0, 0, 7}, 2, 12));
}

}  // namespace
}  // namespace qept
