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


#include <benchmark/benchmark.h>

#include <vector>

#include "qept/channels.hpp"
#include "qept/clifford.hpp"
#include "qept/entanglement.hpp"
#include "qept/ept.hpp"
#include "qept/repeater.hpp"

namespace {

using namespace qept;

// Two-qudit depolarizing noise on a full-support tensor over n qudits.
void BM_ApplyChannel(benchmark::State& state) {
  const auto D = static_cast<Digit>(state.range(0));
  const auto n = static_cast<std::size_t>(state.range(1));
  ErrorProbabilityTensor p = identity_tensor(D, n);
  for (std::size_t q = 0; q < n; ++q) p = apply_channel(p, depolarizing(0.1, D, 1), {q});
  const PauliChannelTable f = depolarizing(0.05, D, 2);
  for (auto _ : state) benchmark::DoNotOptimize(apply_channel(p, f, {0, 1}));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(p.table().support_size()));
}
BENCHMARK(BM_ApplyChannel)->Args({2, 6})->Args({3, 4})->Args({5, 3})->Unit(benchmark::kMicrosecond);

void BM_ApplyClifford(benchmark::State& state) {
  const Digit D = 5;
  const std::size_t n = 3;
  ErrorProbabilityTensor p = identity_tensor(D, n);
  for (std::size_t q = 0; q < n; ++q) p = apply_channel(p, depolarizing(0.1, D, 1), {q});
  const auto cx = automorphism_of(controlled_x(0, 1, 2), D, n);
  for (auto _ : state) benchmark::DoNotOptimize(apply_clifford(p, cx));
}
BENCHMARK(BM_ApplyClifford)->Unit(benchmark::kMicrosecond);

void BM_CountEnumerate(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  // Results are memoized, so only the first call does any work.
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        count_accepted_configurations(2, 13, k, CountMethod::Enumerate));
  }
}
BENCHMARK(BM_CountEnumerate)->Arg(4)->Iterations(1)->Unit(benchmark::kMillisecond);

void BM_CountRecursion(benchmark::State& state) {
  const auto N = static_cast<std::size_t>(state.range(0));
  const auto n = static_cast<std::size_t>(state.range(1));
  // Memoized, so time a single cold call.
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        count_accepted_configurations(N, n, 2, CountMethod::DynamicProgramming));
  }
}
BENCHMARK(BM_CountRecursion)
    ->Args({4, 13})
    ->Args({6, 9})
    ->Iterations(1)
    ->Unit(benchmark::kMicrosecond);

void BM_LogNegativity(benchmark::State& state) {
  const auto D = static_cast<Digit>(state.range(0));
  RepeaterScenario s;
  s.D = D;
  s.N = 20;
  s.f_T = s.f_G = s.f_M = s.f_S = 0.01;
  const BellDiagonalState rho(final_statistics(s));
  for (auto _ : state) benchmark::DoNotOptimize(log_negativity(rho, NegativityMethod::Fast));
}
BENCHMARK(BM_LogNegativity)->Arg(13)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_EncodedStatistics(benchmark::State& state) {
  RepeaterScenario s;
  s.D = 13;
  s.N = static_cast<std::size_t>(state.range(0));
  s.f_T = s.f_G = s.f_M = s.f_S = 0.01;
  s.encoding = Encoding{13, 7, std::nullopt};
  for (auto _ : state) benchmark::DoNotOptimize(final_statistics(s));
}
BENCHMARK(BM_EncodedStatistics)->Arg(50)->Arg(400)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
