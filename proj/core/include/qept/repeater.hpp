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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qept/modarith.hpp"

namespace qept {

/// Photon loss handling: abort a run when a station flags more than k_max
/// of its n outcomes as lost.
struct Abortion {
  std::size_t k_max = 0;
  double f_abs = 0.0;
};

/// An abstract [[n,1,d]]_D code used at every station.
struct Encoding {
  std::size_t n = 1;
  std::size_t d = 1;
  std::optional<Abortion> abortion;

  /// The [[2d-1,1,d]]_D polynomial code. Throws InvalidCode.
  static Encoding polynomial(Digit modulus, std::size_t distance);
};

struct RepeaterScenario {
  Digit D = 2;
  /// Number of stations including Bob. Must be even.
  std::size_t N = 2;
  double f_T = 0.0;
  double f_G = 0.0;
  double f_M = 0.0;
  double f_S = 0.0;
  std::optional<Encoding> encoding;

  /// Throws OddN, OutOfRange, InvalidCode or ThresholdExceedsDistance.
  void validate() const;
};

/// f_abs = 1 - (1 - f_C) exp(-gamma).
double absorption_probability(double f_C, double gamma);

/// Frame targets (c_A, c_B) from the station outcomes c_1..c_N.
std::pair<Digit, Digit> pauli_frame_targets(const std::vector<Digit>& outcomes,
                                            Digit modulus);

/// Error distribution of one measured digit: p0 for no error, p_other for
/// each of the D-1 nonzero shifts.
struct DigitErrorStats {
  double p0 = 1.0;
  double p_other = 0.0;

  std::vector<double> distribution(Digit modulus) const;
};

/// Physical outcome statistics at station 1 (`first_station`) or any later
/// station, Bob included.
DigitErrorStats station_measurement_stats(const RepeaterScenario& scenario,
                                          bool first_station);

/// Frame errors on Bob's qudit. `even` is the distribution of the error on
/// c_A (an X shift), `odd` that of the error on c_B.
struct FrameChannels {
  std::vector<double> even;
  std::vector<double> odd;
};

/// Convolves per-station outcome error distributions with the alternating
/// signs of the frame targets.
FrameChannels frame_error_channels(Digit modulus, std::size_t N,
                                   const std::vector<double>& first_station,
                                   const std::vector<double>& later_station);

/// Frame channels from the scenario's station statistics (logical ones when
/// an encoding is present).
FrameChannels frame_error_channels(const RepeaterScenario& scenario);

/// Error statistics of the distributed pair, indexed by the error X^r Z^s on
/// Bob's qudit.
class CosetStatistics {
 public:
  /// `table` has D*D entries, index r*D + s. Validates normalization.
  CosetStatistics(Digit modulus, std::vector<double> table);

  Digit modulus() const noexcept { return D_; }
  double at(Digit r, Digit s) const;
  const std::vector<double>& table() const noexcept { return table_; }

 private:
  Digit D_;
  std::vector<double> table_;
};

double max_abs_difference(const CosetStatistics& a, const CosetStatistics& b);

CosetStatistics unencoded_final_statistics(const RepeaterScenario& scenario);

/// Probability that an error of weight at most t occurs on n digits with
/// per-digit statistics (p0, p1).
double correction_probability(Digit modulus, std::size_t n, std::size_t t,
                              double p0, double p1);

struct LogicalStationStats {
  double p_cor = 1.0;
  double p_succ = 1.0;
  double p_guess = 0.0;
};

/// Logical outcome statistics of a station. With abortion, p_cor is the
/// conditional mixture. Throws NoEncoding.
LogicalStationStats encoded_station_success(const RepeaterScenario& scenario,
                                            bool first_station = false);

CosetStatistics encoded_final_statistics(const RepeaterScenario& scenario);

/// Dispatches on whether an encoding is present.
CosetStatistics final_statistics(const RepeaterScenario& scenario);

struct AbortionStationProbabilities {
  double p_first = 0.0;  // k flagged outcomes at station 1
  double p_later = 0.0;  // k flagged outcomes at a later station
  double p_cor = 0.0;    // correction probability with k outcomes dropped
};

/// Requires an encoding with abortion and k <= k_max.
AbortionStationProbabilities abortion_station_probabilities(
    const RepeaterScenario& scenario, std::size_t k, bool first_station = false);

/// p_cor conditioned on the run not being aborted at this station.
double conditional_station_correction(const RepeaterScenario& scenario,
                                      bool first_station = false);

enum class CountMethod { Auto, Enumerate, DynamicProgramming };

/// alpha(N, n, k_max; m) for m = 0..N*n. Enumerate visits every N x n binary
/// matrix and throws BruteForceCapExceeded above `brute_force_cap` matrices.
/// Auto enumerates under the cap and falls back to a row-count recursion.
/// Results are cached per (N, n, k_max).
std::vector<std::uint64_t> count_accepted_configurations(
    std::size_t N, std::size_t n, std::size_t k_max,
    CountMethod method = CountMethod::Auto,
    std::uint64_t brute_force_cap = std::uint64_t{1} << 28);

/// Probability that no station aborts. 1 without abortion.
double distribution_probability(const RepeaterScenario& scenario);

/// Channel model for the chain qudits in the stepwise simulation.
enum class ChainChannels {
  /// X and Z parts drawn independently with the depolarizing marginals.
  Factorized,
  /// The full single-qudit depolarizing channel.
  Depolarizing,
};

/// Runs the unencoded protocol gate by gate on error probability tensors and
/// reduces the final pair with the Bell stabilizer.
CosetStatistics stepwise_oracle_statistics(
    const RepeaterScenario& scenario,
    ChainChannels chain = ChainChannels::Factorized);

}  // namespace qept
