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

#include <algorithm>
#include <random>

#include "qept/error.hpp"
#include "qept/modarith.hpp"

namespace qept {
namespace {

// Exhaustive search, independent of the extended-Euclid implementation.
Digit brute_force_inverse(Digit x, Digit D) {
  for (Digit y = 0; y < D; ++y) {
    if (std::uint64_t{x} * y % D == 1) return y;
  }
  return D;
}

TEST(Residue, ValuesStayInRange) {
  Residue a(-7, 5);
  EXPECT_EQ(a.value(), 3u);
  Residue b(4, 5);
  EXPECT_EQ((a + b).value(), 2u);
  EXPECT_EQ((a - b).value(), 4u);
  EXPECT_EQ((a * b).value(), 2u);
  EXPECT_EQ((-b).value(), 1u);
}

TEST(Residue, MixedModuliRejected) {
  EXPECT_THROW(Residue(1, 5) + Residue(1, 7), Error);
}

TEST(Inverse, SmallCases) {
  EXPECT_EQ(inverse(Residue(1, 5)).value(), 1u);
  EXPECT_EQ(inverse(Residue(2, 5)).value(), brute_force_inverse(2, 5));
  EXPECT_EQ(inverse(Residue(2, 5)).value(), 3u);
  try {
    inverse(Residue(2, 4));
    FAIL() << "expected NotInvertible";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotInvertible);
  }
}

TEST(Inverse, MatchesExhaustiveSearchAndIsAnInvolution) {
  for (Digit D = 2; D <= 60; ++D) {
    for (Digit x = 0; x < D; ++x) {
      const Digit expected = brute_force_inverse(x, D);
      if (expected == D) {
        EXPECT_THROW(inverse(Residue(x, D)), Error);
        continue;
      }
      const Residue y = inverse(Residue(x, D));
      EXPECT_EQ(y.value(), expected);
      EXPECT_EQ(inverse(y).value(), x);
    }
  }
}

TEST(Pow, ZeroToTheZeroIsOne) {
  EXPECT_EQ(pow(Residue(0, 5), 0).value(), 1u);
  EXPECT_EQ(pow(Residue(0, 5), 3).value(), 0u);
  EXPECT_EQ(pow(Residue(3, 7), 6).value(), 1u);
}

TEST(Primes, SmallTable) {
  const std::vector<int> primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37,
                                   41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83,
                                   89, 97};
  for (int v = 0; v <= 100; ++v) {
    const bool expected =
        std::find(primes.begin(), primes.end(), v) != primes.end();
    EXPECT_EQ(is_prime(v), expected) << v;
  }
}

TEST(ResidueVector, DotAndArithmetic) {
  ResidueVector a(5, {1, 2, 3});
  ResidueVector b(5, {4, 4, 4});
  EXPECT_EQ(a.dot(b).value(), (4 + 8 + 12) % 5u);
  EXPECT_EQ((a + b), ResidueVector(5, {0, 1, 2}));
  EXPECT_EQ((a - b), ResidueVector(5, {2, 3, 4}));
  EXPECT_EQ(a * 2, ResidueVector(5, {2, 4, 1}));
  EXPECT_THROW(a.dot(ResidueVector(5, {1, 2})), Error);
  EXPECT_THROW(a + ResidueVector(7, {1, 2, 3}), Error);
}

TEST(VandermondeSolve, ConstantPolynomial) {
  for (Digit c = 0; c < 3; ++c) {
    const auto coeffs =
        vandermonde_solve(ResidueVector(3, {0, 1}), ResidueVector(3, {c, c}));
    EXPECT_EQ(coeffs, ResidueVector(3, {c, 0}));
  }
}

TEST(VandermondeSolve, QuadraticOverF3MatchesBruteForce) {
  const ResidueVector points(3, {0, 1, 2});
  const ResidueVector evals(3, {1, 2, 0});
  // Search all 27 coefficient triples for the interpolant.
  int matches = 0;
  ResidueVector found(3, 3);
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      for (int c = 0; c < 3; ++c) {
        ResidueVector lam(3, {a, b, c});
        bool ok = true;
        for (std::size_t i = 0; i < 3; ++i) {
          ok = ok && evaluate_polynomial(lam, points.at(i)) == evals.at(i);
        }
        if (ok) {
          ++matches;
          found = lam;
        }
      }
    }
  }
  ASSERT_EQ(matches, 1);
  EXPECT_EQ(vandermonde_solve(points, evals), found);
}

TEST(VandermondeSolve, Errors) {
  try {
    vandermonde_solve(ResidueVector(5, {0, 0}), ResidueVector(5, {1, 2}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DuplicatePoint);
  }
  try {
    vandermonde_solve(ResidueVector(4, {0, 1}), ResidueVector(4, {1, 2}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonPrimeModulus);
  }
}

TEST(VandermondeSolve, LeftInverseOfEvaluationOnRandomInstances) {
  std::mt19937_64 rng(20260101);
  const std::vector<std::pair<Digit, std::size_t>> cases = {{3, 2}, {5, 3}, {7, 4}};
  for (auto [D, d] : cases) {
    for (int trial = 0; trial < 1000; ++trial) {
      std::vector<std::int64_t> pts(D);
      for (Digit i = 0; i < D; ++i) pts[i] = i;
      std::shuffle(pts.begin(), pts.end(), rng);
      pts.resize(d);
      std::vector<std::int64_t> vals(d);
      for (auto& v : vals) v = static_cast<std::int64_t>(rng() % D);
      const ResidueVector points(D, pts);
      const ResidueVector evals(D, vals);
      const ResidueVector lam = vandermonde_solve(points, evals);
      ASSERT_EQ(lam.size(), d);
      for (std::size_t i = 0; i < d; ++i) {
        ASSERT_EQ(evaluate_polynomial(lam, points.at(i)), evals.at(i));
      }
    }
  }
}

}  // namespace
}  // namespace qept
