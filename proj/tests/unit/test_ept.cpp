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
#include <sstream>

#include "../support/random_circuits.hpp"
#include "qept/ept.hpp"
#include "qept/error.hpp"
#include "qept/limits.hpp"

namespace qept {
namespace {

ErrorProbabilityTensor delta(Digit D, std::size_t n, std::vector<Digit> digits) {
  LabelTable t(D, 2 * n);
  t.add(digits, 1.0);
  return ErrorProbabilityTensor(D, n, std::move(t));
}

ErrorProbabilityTensor random_tensor(Digit D, std::size_t n, std::mt19937_64& rng,
                                     double density = 1.0) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  LabelTable raw(D, 2 * n);
  std::vector<std::pair<std::vector<Digit>, double>> entries;
  double total = 0.0;
  std::size_t size = 1;
  for (std::size_t i = 0; i < 2 * n; ++i) size *= D;
  std::vector<Digit> d(2 * n, 0);
  for (std::size_t idx = 0; idx < size; ++idx) {
    if (u(rng) < density) {
      const double w = u(rng);
      entries.emplace_back(d, w);
      total += w;
    }
    for (std::size_t i = 2 * n; i-- > 0;) {
      if (++d[i] < D) break;
      d[i] = 0;
    }
  }
  if (entries.empty()) entries.emplace_back(std::vector<Digit>(2 * n, 0), total = 1.0);
  for (const auto& [digits, w] : entries) raw.add(digits, w / total);
  return ErrorProbabilityTensor(D, n, std::move(raw));
}

std::vector<double> sorted_entries(const ErrorProbabilityTensor& p) {
  std::vector<double> out;
  p.table().for_each([&](const std::vector<Digit>&, double w) { out.push_back(w); });
  std::sort(out.begin(), out.end());
  return out;
}

void expect_normalized(const ErrorProbabilityTensor& p) {
  EXPECT_NEAR(p.table().total(), 1.0, 1e-12);
}

TEST(IdentityTensor, Examples) {
  const auto p = identity_tensor(2, 1);
  EXPECT_EQ(p.table().dense_values(), (std::vector<double>{1, 0, 0, 0}));
  const auto q = identity_tensor(5, 2);
  EXPECT_EQ(q.table().dense_values().size(), 625u);
  EXPECT_EQ(q.table().support_size(), 1u);
  EXPECT_EQ(identity_tensor(3, 1).table().dense_values().size(), 9u);
}

TEST(ApplyClifford, Examples) {
  const auto id = identity_tensor(3, 2);
  const auto cx = automorphism_of(controlled_x(0, 1, 2), 3, 2);
  EXPECT_EQ(max_abs_difference(apply_clifford(id, cx).table(), id.table()), 0.0);

  const auto x_on_0 = delta(2, 2, {1, 0, 0, 0});
  const auto after = apply_clifford(x_on_0, automorphism_of(controlled_z(0, 1), 2, 2));
  EXPECT_DOUBLE_EQ(after.table().at({1, 0, 0, 1}), 1.0);

  const auto x = delta(5, 1, {1, 0});
  EXPECT_DOUBLE_EQ(apply_clifford(x, automorphism_of(Fourier{0}, 5, 1)).table().at({0, 1}), 1.0);
}

TEST(ApplyClifford, PermutesEntriesExactly) {
  std::mt19937_64 rng(5);
  for (Digit D : {2u, 3u, 5u}) {
    const auto p = random_tensor(D, 2, rng);
    for (const GateSpec& g : {GateSpec{Fourier{1}}, controlled_x(1, 0, 1), controlled_z(0, 1, 1),
                              GateSpec{MultiplyBy{D - 1, 0}}}) {
      const auto a = automorphism_of(g, D, 2);
      const auto q = apply_clifford(p, a);
      EXPECT_EQ(sorted_entries(q), sorted_entries(p));
      expect_normalized(q);
      // The reversed description undoes the relabeling.
      EXPECT_EQ(max_abs_difference(apply_clifford(q, a.inverse()).table(), p.table()), 0.0);
    }
  }
}

TEST(ApplyChannel, Examples) {
  std::mt19937_64 rng(9);
  const auto p = random_tensor(3, 1, rng);
  EXPECT_LT(max_abs_difference(apply_channel(p, PauliChannelTable::identity(3, 1)).table(),
                               p.table()), 1e-16);
  const auto dep = depolarizing(0.2, 3, 2);
  EXPECT_LT(max_abs_difference(apply_channel(identity_tensor(3, 2), dep).table(), dep.coeffs()),
            1e-16);
  LabelTable x(2, 2);
  x.add(std::vector<Digit>{1, 0}, 1.0);
  const auto out = apply_channel(delta(2, 1, {1, 0}), PauliChannelTable(2, 1, x));
  EXPECT_DOUBLE_EQ(out.table().at({0, 0}), 1.0);
}

TEST(ApplyChannel, ConvolutionCommutes) {
  std::mt19937_64 rng(13);
  for (Digit D : {2u, 3u, 4u}) {
    const auto p = random_tensor(D, 2, rng);
    const auto a = depolarizing(0.3, D, 1);
    const auto b = axis_depolarizing(0.6, Axis::ZOnly, D);
    const auto ab = apply_channel(apply_channel(p, a, {0}), b, {0});
    const auto ba = apply_channel(apply_channel(p, b, {0}), a, {0});
    EXPECT_LT(max_abs_difference(ab.table(), ba.table()), 1e-15);
    expect_normalized(ab);
  }
}

TEST(ApplyChannel, ShapeErrors) {
  const auto p = identity_tensor(3, 2);
  EXPECT_THROW(apply_channel(p, depolarizing(0.1, 2, 1), {0}), Error);
  EXPECT_THROW(apply_channel(p, depolarizing(0.1, 3, 1), {2}), Error);
  EXPECT_THROW(apply_channel(p, depolarizing(0.1, 3, 2), {0, 0}), Error);
  EXPECT_THROW(apply_channel(p, depolarizing(0.1, 3, 1)), Error);
}

TEST(MeasureQudit, Examples) {
  const auto m0 = measure_qudit(identity_tensor(3, 2), 1);
  EXPECT_EQ(m0.flip_distribution(), (std::vector<double>{1, 0, 0}));
  EXPECT_EQ(m0.remaining_qudits(), 1u);

  const auto mz = measure_qudit(delta(3, 2, {0, 0, 0, 2}), 1);
  EXPECT_EQ(mz.flip_distribution(), (std::vector<double>{1, 0, 0}));

  const auto mx = measure_qudit(delta(3, 2, {0, 1, 0, 0}), 1);
  EXPECT_EQ(mx.flip_distribution(), (std::vector<double>{0, 1, 0}));
  EXPECT_DOUBLE_EQ(mx.remaining().table().at({0, 0}), 1.0);

  EXPECT_THROW(measure_qudit(identity_tensor(3, 2), 2), Error);
}

TEST(MeasureQudit, JointTableKeepsCorrelations) {
  std::mt19937_64 rng(21);
  const auto p = random_tensor(3, 2, rng);
  const auto m = measure_qudit(p, 0);
  for (Digit flip = 0; flip < 3; ++flip) {
    for (Digit r = 0; r < 3; ++r) {
      for (Digit s = 0; s < 3; ++s) {
        double expected = 0.0;
        for (Digit t = 0; t < 3; ++t) expected += p.table().at({flip, r, t, s});
        EXPECT_NEAR(m.joint().at({flip, r, s}), expected, 1e-16);
      }
    }
  }
}

TEST(DiscardQudits, Examples) {
  std::mt19937_64 rng(17);
  const auto p = random_tensor(3, 2, rng);
  EXPECT_EQ(max_abs_difference(discard_qudits(p, 2).table(), p.table()), 0.0);
  EXPECT_EQ(max_abs_difference(discard_qudits(identity_tensor(3, 2), 1).table(),
                               identity_tensor(3, 1).table()),
            0.0);
  // Product tensor: the marginal is computed by direct summation here.
  const auto a = random_tensor(3, 1, rng);
  const auto b = random_tensor(3, 1, rng);
  LabelTable prod(3, 4);
  a.table().for_each([&](const std::vector<Digit>& da, double wa) {
    b.table().for_each([&](const std::vector<Digit>& db, double wb) {
      prod.add(std::vector<Digit>{da[0], db[0], da[1], db[1]}, wa * wb);
    });
  });
  const ErrorProbabilityTensor ab(3, 2, prod);
  EXPECT_LT(max_abs_difference(discard_qudits(ab, 1).table(), a.table()), 1e-15);
  EXPECT_LT(max_abs_difference(discard_qudits_at(ab, {0}).table(), b.table()), 1e-15);
  EXPECT_THROW(discard_qudits(ab, 3), Error);
}

TEST(AppendQudits, AddsCleanWires) {
  std::mt19937_64 rng(19);
  const auto p = random_tensor(3, 1, rng);
  const auto q = append_qudits(p, 2);
  EXPECT_EQ(q.num_qudits(), 3u);
  EXPECT_EQ(max_abs_difference(discard_qudits(q, 1).table(), p.table()), 0.0);
  EXPECT_EQ(q.table().support_size(), p.table().support_size());
}

TEST(CosetReduce, Examples) {
  std::mt19937_64 rng(23);
  const auto p = random_tensor(2, 2, rng);
  const auto trivial = coset_reduce(p, StabilizerBasis(2, 2, {}));
  EXPECT_EQ(max_abs_difference(trivial.table(), p.table()), 0.0);

  const auto bell = bell_stabilizer(2);
  const auto r = coset_reduce(identity_tensor(2, 2), bell);
  EXPECT_EQ(r.span_size(), 4u);
  EXPECT_EQ(r.table().support_size(), 1u);
  EXPECT_DOUBLE_EQ(r.table().at({0, 0, 0, 0}), 1.0);

  LabelTable u(2, 4);
  for (std::size_t i = 0; i < 16; ++i) {
    u.add(std::vector<Digit>{Digit(i >> 3 & 1), Digit(i >> 2 & 1), Digit(i >> 1 & 1), Digit(i & 1)},
          1.0 / 16);
  }
  const auto ru = coset_reduce(ErrorProbabilityTensor(2, 2, u), bell);
  EXPECT_EQ(ru.table().support_size(), 4u);
  ru.table().for_each([](const std::vector<Digit>&, double w) { EXPECT_DOUBLE_EQ(w, 0.25); });
}

TEST(CosetReduce, BellParametersOneSided) {
  std::mt19937_64 rng(29);
  for (Digit D : {2u, 3u, 5u}) {
    const auto p = random_tensor(D, 2, rng);
    const auto q = bell_parameters(coset_reduce(p, bell_stabilizer(D)));
    // Adding -(a, c) of the stabilizer maps ((a,b),(c,d)) to ((0, b-c), (0, d-a)).
    std::vector<double> expected(D * D, 0.0);
    p.table().for_each([&](const std::vector<Digit>& d, double w) {
      expected[((d[1] + D - d[2]) % D) * D + (d[3] + D - d[0]) % D] += w;
    });
    for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_NEAR(q[i], expected[i], 1e-15);
  }
}

TEST(CosetReduce, IndependentOfGeneratorBasis) {
  std::mt19937_64 rng(31);
  for (Digit D : {3u, 5u}) {
    const auto p = random_tensor(D, 2, rng);
    const auto base = coset_reduce(p, bell_stabilizer(D));
    const auto g = bell_stabilizer(D).generators();
    for (int t = 0; t < 5; ++t) {
      // [[1, c], [0, 1]] then a swap: unimodular recombinations.
      const Digit c = static_cast<Digit>(rng() % D);
      const Digit u = static_cast<Digit>(1 + rng() % (D - 1));
      std::vector<PauliLabel> h = {g[1].scaled(u), g[0] + g[1].scaled(c)};
      const auto other = coset_reduce(p, StabilizerBasis(D, 2, h));
      EXPECT_EQ(max_abs_difference(base.table(), other.table()), 0.0);
    }
  }
}

TEST(CosetReduce, Errors) {
  try {
    StabilizerBasis(3, 1, {PauliLabel::single(3, 1, 0, 1, 0), PauliLabel::single(3, 1, 0, 0, 1)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonCommutingGenerators);
  }
  const auto saved = span_cap();
  set_span_cap(8);
  try {
    coset_reduce(identity_tensor(3, 2), bell_stabilizer(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SpanTooLarge);
  }
  set_span_cap(saved);
}

TEST(DenseChannel, Examples) {
  std::mt19937_64 rng(37);
  const auto rho = random_density_matrix(9, rng);
  EXPECT_LT((to_dense_channel_matrix(identity_tensor(3, 2), rho) - rho).cwiseAbs().maxCoeff(),
            1e-15);
  LabelTable u(3, 4);
  for (std::size_t i = 0; i < 81; ++i) {
    u.add(std::vector<Digit>{Digit(i / 27), Digit(i / 9 % 3), Digit(i / 3 % 3), Digit(i % 3)},
          1.0 / 81);
  }
  const auto mixed = to_dense_channel_matrix(ErrorProbabilityTensor(3, 2, u), rho);
  EXPECT_LT((mixed - Eigen::MatrixXcd::Identity(9, 9) / 9.0).cwiseAbs().maxCoeff(), 1e-14);

  Eigen::MatrixXcd zero = Eigen::MatrixXcd::Zero(2, 2);
  zero(0, 0) = 1;
  const auto flipped = to_dense_channel_matrix(delta(2, 1, {1, 0}), zero);
  EXPECT_DOUBLE_EQ(flipped(1, 1).real(), 1.0);
  EXPECT_DOUBLE_EQ(flipped(0, 0).real(), 0.0);
}

struct Shape {
  Digit D;
  std::size_t n;
};

class OracleEquivalence : public ::testing::TestWithParam<Shape> {};

TEST_P(OracleEquivalence, TensorMatchesDensityMatrixEvolution) {
  const auto [D, n] = GetParam();
  std::mt19937_64 rng(1000 + D * 10 + n);
  for (int c = 0; c < 10; ++c) {
    const std::size_t length = 1 + rng() % 8;
    const auto steps = testing::random_circuit(D, n, length, rng);
    EXPECT_LT(testing::circuit_discrepancy(steps, D, n, 20, rng), 1e-10);
  }
}

INSTANTIATE_TEST_SUITE_P(SmallCircuits, OracleEquivalence,
                         ::testing::Values(Shape{2, 2}, Shape{3, 2}, Shape{5, 1}, Shape{2, 3}));

TEST(Normalization, HoldsAfterEveryOperation) {
  std::mt19937_64 rng(41);
  for (int c = 0; c < 20; ++c) {
    auto steps = testing::random_circuit(3, 3, 8, rng);
    auto p = identity_tensor(3, 3);
    for (const auto& s : steps) {
      if (const auto* g = std::get_if<GateSpec>(&s)) {
        p = apply_clifford(p, automorphism_of(*g, 3, 3));
      } else {
        const auto& noise = std::get<testing::NoiseStep>(s);
        p = apply_channel(p, noise.channel, noise.qudits);
      }
      expect_normalized(p);
    }
    expect_normalized(measure_qudit(p, 1).remaining());
    expect_normalized(contract_phase_index(p, 2));
    expect_normalized(discard_qudits(p, 1));
  }
}

TEST(ContractPhaseIndex, AgreesWithDephasedOracle) {
  std::mt19937_64 rng(43);
  const Digit D = 3;
  const std::size_t n = 2;
  // Complete dephasing of qudit 1: average over Z^t conjugations.
  auto dephase = [&](const Eigen::MatrixXcd& m) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(m.rows(), m.cols());
    for (Digit t = 0; t < D; ++t) {
      const auto z = to_matrix(PauliLabel::single(D, n, 1, 0, t));
      out += z * m * z.adjoint() / static_cast<double>(D);
    }
    return out;
  };
  for (int c = 0; c < 10; ++c) {
    const auto steps = testing::random_circuit(D, n, 6, rng);
    const auto p = contract_phase_index(testing::run_tensor(steps, D, n), 1);
    const auto rho = random_density_matrix(9, rng);
    const auto [noisy, ideal] = testing::run_dense(steps, D, n, rho);
    const Eigen::MatrixXcd lhs = dephase(to_dense_channel_matrix(p, ideal));
    EXPECT_LT((lhs - dephase(noisy)).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(SparseLayout, MatchesDenseLayout) {
  // Sparse supports stay under the cap only for low-support noise.
  const std::vector<testing::Step> steps = {
      GateSpec{Fourier{0}},
      testing::NoiseStep{axis_depolarizing(0.3, Axis::XOnly, 3), {0}},
      controlled_x(0, 1, 2),
      testing::NoiseStep{axis_depolarizing(0.2, Axis::ZOnly, 3), {1}},
      GateSpec{MultiplyBy{2, 1}}};
  const auto dense = testing::run_tensor(steps, 3, 2);
  const auto saved = dense_cap();
  set_dense_cap(10);
  const auto sparse = testing::run_tensor(steps, 3, 2);
  EXPECT_FALSE(sparse.table().is_dense());
  const auto reduced = coset_reduce(sparse, bell_stabilizer(3));
  set_dense_cap(saved);
  EXPECT_TRUE(dense.table().is_dense());
  EXPECT_LT(max_abs_difference(dense.table(), sparse.table()), 1e-15);
  const auto dense_reduced = coset_reduce(dense, bell_stabilizer(3));
  EXPECT_LT(max_abs_difference(dense_reduced.table(), reduced.table()), 1e-15);
}

TEST(SparseLayout, SupportIsCapped) {
  const auto saved = dense_cap();
  set_dense_cap(4);
  try {
    apply_channel(identity_tensor(3, 1), depolarizing(0.5, 3, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_TRUE(is_cap_error(e.code()));
  }
  set_dense_cap(saved);
}

TEST(Csv, LexicographicNonzeroRows) {
  LabelTable t(2, 2);
  t.add(std::vector<Digit>{1, 1}, 0.25);
  t.add(std::vector<Digit>{0, 0}, 0.75);
  std::ostringstream out;
  write_csv(out, ErrorProbabilityTensor(2, 1, t));
  EXPECT_EQ(out.str(), "r_1,s_1,probability\n0,0,0.75\n1,1,0.25\n");
}

}  // namespace
}  // namespace qept
