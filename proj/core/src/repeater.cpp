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


#include "qept/repeater.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <mutex>
#include <string>
#include <tuple>

#include "qept/channels.hpp"
#include "qept/clifford.hpp"
#include "qept/ept.hpp"
#include "qept/error.hpp"
#include "qept/qpcode.hpp"

namespace qept {

namespace {

void check_probability(double f, const char* name) {
  if (!(f >= 0.0 && f <= 1.0)) {
    throw Error(ErrorCode::OutOfRange,
                std::string(name) + " must lie in [0,1], got " + std::to_string(f));
  }
}

// Distribution on Z/DZ with weight p0 at zero and the rest spread evenly,
// where `b` is the surviving weight (1 - f) of a chain of depolarizing factors.
DigitErrorStats from_survival(double b, Digit D) {
  return DigitErrorStats{(1.0 + (D - 1) * b) / D, (1.0 - b) / D};
}

std::vector<double> convolve(const std::vector<double>& a,
                             const std::vector<double>& b) {
  const std::size_t D = a.size();
  std::vector<double> out(D, 0.0);
  for (std::size_t i = 0; i < D; ++i) {
    if (a[i] == 0.0) continue;
    for (std::size_t j = 0; j < D; ++j) out[(i + j) % D] += a[i] * b[j];
  }
  return out;
}

// Distribution of -x when x has distribution `a`.
std::vector<double> reflect(const std::vector<double>& a) {
  const std::size_t D = a.size();
  std::vector<double> out(D);
  for (std::size_t i = 0; i < D; ++i) out[(D - i) % D] = a[i];
  return out;
}

std::vector<double> delta(Digit D) {
  std::vector<double> out(D, 0.0);
  out[0] = 1.0;
  return out;
}

const Encoding& require_encoding(const RepeaterScenario& s) {
  if (!s.encoding) throw Error(ErrorCode::NoEncoding, "scenario has no encoding");
  return *s.encoding;
}

double binomial(std::size_t n, std::size_t k) {
  return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
                  std::lgamma(n - k + 1.0));
}

// x^e with 0^0 = 1, in log space where possible.
double log_power(double x, std::size_t e) {
  if (e == 0) return 0.0;
  return e * std::log(x);
}

LogicalStationStats logical_from_cor(double p_cor, Digit D) {
  return LogicalStationStats{p_cor, (1.0 + (D - 1) * p_cor) / D,
                             (1.0 - p_cor) / D};
}

std::vector<double> logical_distribution(const LogicalStationStats& st, Digit D) {
  std::vector<double> out(D, st.p_guess);
  out[0] = st.p_succ;
  return out;
}

}  // namespace

Encoding Encoding::polynomial(Digit modulus, std::size_t distance) {
  const QuantumPolynomialCode code(modulus, distance);
  Encoding e;
  e.n = code.length();
  e.d = code.distance();
  return e;
}

void RepeaterScenario::validate() const {
  if (D < 2) throw Error(ErrorCode::OutOfRange, "D must be at least 2");
  if (N % 2 != 0) throw Error(ErrorCode::OddN, "N must be even, got " + std::to_string(N));
  check_probability(f_T, "f_T");
  check_probability(f_G, "f_G");
  check_probability(f_M, "f_M");
  check_probability(f_S, "f_S");
  if (encoding) {
    if (encoding->d < 1 || encoding->n < encoding->d) {
      throw Error(ErrorCode::InvalidCode, "need 1 <= d <= n");
    }
    if (encoding->abortion) {
      check_probability(encoding->abortion->f_abs, "f_abs");
      if (encoding->abortion->k_max >= encoding->d) {
        throw Error(ErrorCode::ThresholdExceedsDistance,
                    "k_max must be smaller than d");
      }
    }
  }
}

double absorption_probability(double f_C, double gamma) {
  check_probability(f_C, "f_C");
  if (!(gamma >= 0.0)) throw Error(ErrorCode::OutOfRange, "gamma must be >= 0");
  return 1.0 - (1.0 - f_C) * std::exp(-gamma);
}

std::pair<Digit, Digit> pauli_frame_targets(const std::vector<Digit>& c, Digit D) {
  const std::size_t N = c.size();
  if (N % 2 != 0) throw Error(ErrorCode::OddN, "odd number of outcomes");
  std::int64_t a = 0, b = 0;
  for (std::size_t i = 1; i <= N / 2; ++i) {
    const std::int64_t sign = (i % 2 == 0) ? 1 : -1;
    a += sign * static_cast<std::int64_t>(c[2 * i - 1]);
    b += sign * static_cast<std::int64_t>(c[N - 2 * i]);
  }
  return {reduce(a, D), reduce(b, D)};
}

std::vector<double> DigitErrorStats::distribution(Digit D) const {
  std::vector<double> out(D, p_other);
  out[0] = p0;
  return out;
}

DigitErrorStats station_measurement_stats(const RepeaterScenario& s,
                                          bool first_station) {
  s.validate();
  const double t = 1.0 - s.f_T, g = 1.0 - s.f_G, m = 1.0 - s.f_M;
  const double b = first_station ? t * g * g * m : t * t * g * g * g * m;
  return from_survival(b, s.D);
}

FrameChannels frame_error_channels(Digit D, std::size_t N,
                                   const std::vector<double>& first,
                                   const std::vector<double>& later) {
  if (N % 2 != 0) throw Error(ErrorCode::OddN, "N must be even");
  if (first.size() != D || later.size() != D) {
    throw Error(ErrorCode::ShapeMismatch, "station distributions need D entries");
  }
  FrameChannels out{delta(D), delta(D)};
  for (std::size_t i = 1; i <= N / 2; ++i) {
    const bool negative = i % 2 == 1;
    // Station 2i feeds c_A; station 2i is never the first one.
    out.even = convolve(out.even, negative ? reflect(later) : later);
    const std::vector<double>& odd_station = (N + 1 - 2 * i == 1) ? first : later;
    out.odd = convolve(out.odd, negative ? reflect(odd_station) : odd_station);
  }
  return out;
}

FrameChannels frame_error_channels(const RepeaterScenario& s) {
  s.validate();
  if (s.encoding) {
    return frame_error_channels(
        s.D, s.N, logical_distribution(encoded_station_success(s, true), s.D),
        logical_distribution(encoded_station_success(s, false), s.D));
  }
  return frame_error_channels(s.D, s.N,
                              station_measurement_stats(s, true).distribution(s.D),
                              station_measurement_stats(s, false).distribution(s.D));
}

CosetStatistics::CosetStatistics(Digit modulus, std::vector<double> table)
    : D_(modulus), table_(std::move(table)) {
  if (table_.size() != std::size_t{D_} * D_) {
    throw Error(ErrorCode::ShapeMismatch, "coset table needs D*D entries");
  }
  double sum = 0.0;
  for (double w : table_) {
    if (!(w >= 0.0)) throw Error(ErrorCode::InvalidArgument, "negative coset weight");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw Error(ErrorCode::InvalidArgument,
                "coset weights sum to " + std::to_string(sum));
  }
}

double CosetStatistics::at(Digit r, Digit s) const {
  if (r >= D_ || s >= D_) throw Error(ErrorCode::IndexOutOfRange, "coset label");
  return table_[std::size_t{r} * D_ + s];
}

double max_abs_difference(const CosetStatistics& a, const CosetStatistics& b) {
  if (a.modulus() != b.modulus()) throw Error(ErrorCode::ModulusMismatch, "coset tables");
  double m = 0.0;
  for (std::size_t i = 0; i < a.table().size(); ++i) {
    m = std::max(m, std::abs(a.table()[i] - b.table()[i]));
  }
  return m;
}

CosetStatistics unencoded_final_statistics(const RepeaterScenario& s) {
  s.validate();
  const Digit D = s.D;
  const FrameChannels frames = frame_error_channels(
      D, s.N, station_measurement_stats(s, true).distribution(D),
      station_measurement_stats(s, false).distribution(D));
  // X errors on the last chain qudit reach Bob's qudit as Z errors.
  const std::vector<double> prop =
      from_survival((1.0 - s.f_G) * (1.0 - s.f_T), D).distribution(D);
  const std::vector<double>& x = frames.even;
  const std::vector<double> z = convolve(prop, reflect(frames.odd));
  const double f_local =
      1.0 - (1.0 - s.f_G) * (1.0 - s.f_G) * std::pow(1.0 - s.f_S, double(s.N));
  std::vector<double> table(std::size_t{D} * D);
  for (Digit r = 0; r < D; ++r) {
    for (Digit c = 0; c < D; ++c) {
      table[std::size_t{r} * D + c] =
          (1.0 - f_local) * x[r] * z[c] + f_local / (double(D) * D);
    }
  }
  return CosetStatistics(D, std::move(table));
}

double correction_probability(Digit D, std::size_t n, std::size_t t, double p0,
                              double p1) {
  double sum = 0.0;
  for (std::size_t j = 0; j <= std::min(t, n); ++j) {
    if (p0 == 0.0 && j < n) continue;
    if (p1 == 0.0 && j > 0) continue;
    const double log_term = j * std::log(double(D - 1)) + std::log(binomial(n, j)) +
                            log_power(p0, n - j) + log_power(p1, j);
    sum += std::exp(log_term);
  }
  return std::min(sum, 1.0);
}

AbortionStationProbabilities abortion_station_probabilities(
    const RepeaterScenario& s, std::size_t k, bool first_station) {
  s.validate();
  const Encoding& e = require_encoding(s);
  if (!e.abortion) throw Error(ErrorCode::NoEncoding, "scenario has no abortion");
  if (k > e.abortion->k_max || k >= e.d) {
    throw Error(ErrorCode::ThresholdExceedsDistance, "k must not exceed k_max < d");
  }
  const double f = e.abortion->f_abs;
  const double q = 1.0 - (1.0 - f) * (1.0 - f);
  auto weight = [&](double x) {
    if (k > e.n) return 0.0;
    const double lk = (k == 0) ? 0.0 : (x == 0.0 ? -INFINITY : k * std::log(x));
    const double lr = (e.n - k == 0) ? 0.0
                      : (x == 1.0 ? -INFINITY : (e.n - k) * std::log1p(-x));
    return binomial(e.n, k) * std::exp(lk + lr);
  };
  const DigitErrorStats st = station_measurement_stats(s, first_station);
  AbortionStationProbabilities out;
  out.p_first = weight(f);
  out.p_later = weight(q);
  out.p_cor = correction_probability(s.D, e.n - k, (e.d - k - 1) / 2, st.p0,
                                     st.p_other);
  return out;
}

double conditional_station_correction(const RepeaterScenario& s,
                                      bool first_station) {
  s.validate();
  const Encoding& e = require_encoding(s);
  if (!e.abortion) throw Error(ErrorCode::NoEncoding, "scenario has no abortion");
  double norm = 0.0, acc = 0.0;
  for (std::size_t k = 0; k <= e.abortion->k_max; ++k) {
    const auto pr = abortion_station_probabilities(s, k, first_station);
    const double w = first_station ? pr.p_first : pr.p_later;
    norm += w;
    acc += w * pr.p_cor;
  }
  if (norm == 0.0) {
    throw Error(ErrorCode::InvalidArgument, "every run aborts at this station");
  }
  return acc / norm;
}

LogicalStationStats encoded_station_success(const RepeaterScenario& s,
                                            bool first_station) {
  s.validate();
  const Encoding& e = require_encoding(s);
  double p_cor;
  if (e.abortion) {
    p_cor = conditional_station_correction(s, first_station);
  } else {
    const DigitErrorStats st = station_measurement_stats(s, first_station);
    p_cor = correction_probability(s.D, e.n, (e.d - 1) / 2, st.p0, st.p_other);
  }
  return logical_from_cor(p_cor, s.D);
}

CosetStatistics encoded_final_statistics(const RepeaterScenario& s) {
  s.validate();
  const Encoding& e = require_encoding(s);
  const Digit D = s.D;
  const FrameChannels frames = frame_error_channels(s);
  // Local errors on Bob's block after the perfect stabilizer round. The Z
  // side carries one extra transmission factor.
  const double b_x =
      (1.0 - s.f_G) * (1.0 - s.f_G) * std::pow(1.0 - s.f_S, double(s.N));
  const double b_z = b_x * (1.0 - s.f_T);
  const std::size_t t = (e.d - 1) / 2;
  auto local = [&](double b) {
    const DigitErrorStats st = from_survival(b, D);
    return logical_distribution(
        logical_from_cor(correction_probability(D, e.n, t, st.p0, st.p_other), D),
        D);
  };
  const std::vector<double> x = convolve(frames.even, local(b_x));
  const std::vector<double> z = convolve(reflect(frames.odd), local(b_z));
  std::vector<double> table(std::size_t{D} * D);
  for (Digit r = 0; r < D; ++r) {
    for (Digit c = 0; c < D; ++c) table[std::size_t{r} * D + c] = x[r] * z[c];
  }
  return CosetStatistics(D, std::move(table));
}

CosetStatistics final_statistics(const RepeaterScenario& s) {
  return s.encoding ? encoded_final_statistics(s) : unencoded_final_statistics(s);
}

namespace {

bool checked_add(std::uint64_t& acc, std::uint64_t v) {
  return !__builtin_add_overflow(acc, v, &acc);
}

std::vector<std::uint64_t> enumerate_configurations(std::size_t N, std::size_t n,
                                                    std::size_t k_max) {
  const std::uint64_t mask = (n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::vector<std::uint64_t> alpha(N * n + 1, 0);
  // Depth-first over rows; a row is a bit pattern with 1 = photon arrived.
  auto visit = [&](auto&& self, std::size_t row, std::uint64_t prev,
                   std::size_t zeros) -> void {
    if (row == N) {
      ++alpha[zeros];
      return;
    }
    for (std::uint64_t a = 0; a <= mask; ++a) {
      const std::size_t flagged = std::popcount(~(prev & a) & mask);
      if (flagged > k_max) continue;
      self(self, row + 1, a, zeros + (n - std::popcount(a)));
    }
  };
  visit(visit, 0, mask, 0);
  return alpha;
}

// Counts by the number z of lost photons in the previous row, which is all
// that matters up to column permutations.
std::vector<std::uint64_t> recurse_configurations(std::size_t N, std::size_t n,
                                                  std::size_t k_max) {
  std::vector<std::vector<std::uint64_t>> choose(n + 1, std::vector<std::uint64_t>(n + 1, 0));
  for (std::size_t i = 0; i <= n; ++i) {
    choose[i][0] = 1;
    for (std::size_t j = 1; j <= i; ++j) {
      choose[i][j] = choose[i - 1][j - 1];
      if (!checked_add(choose[i][j], choose[i - 1][j])) {
        throw Error(ErrorCode::OutOfRange, "binomial overflow");
      }
    }
  }
  const std::size_t M = N * n;
  // state[z][m]: count with z zeros in the last row and m zeros overall.
  std::vector<std::vector<std::uint64_t>> state(n + 1, std::vector<std::uint64_t>(M + 1, 0));
  state[0][0] = 1;
  for (std::size_t row = 0; row < N; ++row) {
    std::vector<std::vector<std::uint64_t>> next(n + 1, std::vector<std::uint64_t>(M + 1, 0));
    for (std::size_t z = 0; z <= n; ++z) {
      if (z > k_max) continue;  // every previous zero is flagged again
      for (std::size_t m = 0; m <= M; ++m) {
        const std::uint64_t c = state[z][m];
        if (c == 0) continue;
        // u new zeros under previous zeros, v under previous ones.
        for (std::size_t v = 0; v <= n - z && z + v <= k_max; ++v) {
          for (std::size_t u = 0; u <= z; ++u) {
            std::uint64_t ways;
            if (__builtin_mul_overflow(choose[z][u], choose[n - z][v], &ways) ||
                __builtin_mul_overflow(ways, c, &ways) ||
                !checked_add(next[u + v][m + u + v], ways)) {
              throw Error(ErrorCode::OutOfRange, "configuration count overflow");
            }
          }
        }
      }
    }
    state = std::move(next);
  }
  std::vector<std::uint64_t> alpha(M + 1, 0);
  for (std::size_t z = 0; z <= n; ++z) {
    for (std::size_t m = 0; m <= M; ++m) {
      if (!checked_add(alpha[m], state[z][m])) {
        throw Error(ErrorCode::OutOfRange, "configuration count overflow");
      }
    }
  }
  return alpha;
}

}  // namespace

std::vector<std::uint64_t> count_accepted_configurations(
    std::size_t N, std::size_t n, std::size_t k_max, CountMethod method,
    std::uint64_t brute_force_cap) {
  if (n == 0 || n > 63) throw Error(ErrorCode::OutOfRange, "n must be in [1, 63]");
  const bool fits = N * n < 64 && (std::uint64_t{1} << (N * n)) <= brute_force_cap;
  if (method == CountMethod::Enumerate && !fits) {
    throw Error(ErrorCode::BruteForceCapExceeded,
                std::to_string(N) + "x" + std::to_string(n) + " matrices");
  }
  const bool enumerate = method == CountMethod::Enumerate ||
                         (method == CountMethod::Auto && fits);

  static std::mutex cache_mutex;
  static std::map<std::tuple<std::size_t, std::size_t, std::size_t, bool>,
                  std::vector<std::uint64_t>>
      cache;
  const auto key = std::make_tuple(N, n, k_max, enumerate);
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  std::vector<std::uint64_t> alpha = enumerate
                                         ? enumerate_configurations(N, n, k_max)
                                         : recurse_configurations(N, n, k_max);
  std::lock_guard<std::mutex> lock(cache_mutex);
  cache.emplace(key, alpha);
  return alpha;
}

double distribution_probability(const RepeaterScenario& s) {
  s.validate();
  if (!s.encoding || !s.encoding->abortion) return 1.0;
  const Encoding& e = *s.encoding;
  const double f = e.abortion->f_abs;
  const std::size_t total = s.N * e.n;
  const auto alpha = count_accepted_configurations(s.N, e.n, e.abortion->k_max);
  double sum = 0.0;
  for (std::size_t m = 0; m <= total; ++m) {
    if (alpha[m] == 0) continue;
    sum += double(alpha[m]) * std::pow(f, double(m)) * std::pow(1.0 - f, double(total - m));
  }
  return sum;
}

namespace {

// Window layout for the stepwise simulation.
constexpr std::size_t kAlice = 0;
constexpr std::size_t kFrameA = 1;  // accumulates the error on c_A as an X digit
constexpr std::size_t kFrameB = 2;  // accumulates the error on c_B as an X digit
constexpr std::size_t kChain = 3;   // chain qudit held by the current station
constexpr std::size_t kNext = 4;    // qudit created at the current station

// Moves the flip of a measured qudit into the X digit of a frame register.
ErrorProbabilityTensor fold_flip(const MeasuredTensor& m, std::size_t frame,
                                 std::int64_t sign) {
  const Digit D = m.modulus();
  const std::size_t n = m.remaining_qudits();
  LabelTable out(D, 2 * n);
  std::vector<Digit> digits(2 * n);
  const Digit factor = reduce(sign, D);
  m.joint().for_each([&](const std::vector<Digit>& d, double w) {
    std::copy(d.begin() + 1, d.end(), digits.begin());
    digits[frame] = static_cast<Digit>(
        (digits[frame] + std::uint64_t{factor} * d[0]) % D);
    out.add(digits, w);
  });
  return ErrorProbabilityTensor(D, n, std::move(out));
}

}  // namespace

CosetStatistics stepwise_oracle_statistics(const RepeaterScenario& s,
                                           ChainChannels chain) {
  s.validate();
  if (s.encoding) {
    throw Error(ErrorCode::InvalidArgument, "stepwise simulation is unencoded only");
  }
  const Digit D = s.D;
  const std::size_t N = s.N;

  auto local = [&](ErrorProbabilityTensor p, double f, std::size_t q) {
    return apply_channel(p, depolarizing(f, D, 1), {q});
  };
  auto on_chain = [&](ErrorProbabilityTensor p, double f, std::size_t q) {
    if (chain == ChainChannels::Depolarizing) return local(std::move(p), f, q);
    p = apply_channel(p, axis_depolarizing(f, Axis::XOnly, D), {q});
    return apply_channel(p, axis_depolarizing(f, Axis::ZOnly, D), {q});
  };

  // Alice entangles A with the first chain qudit.
  ErrorProbabilityTensor p = identity_tensor(D, 4);
  p = apply_clifford(p, automorphism_of(controlled_z(kAlice, kChain), D, 4));
  p = local(std::move(p), s.f_G, kAlice);
  p = on_chain(std::move(p), s.f_G, kChain);
  p = on_chain(std::move(p), s.f_T, kChain);
  if (N == 0) {
    throw Error(ErrorCode::InvalidArgument, "stepwise simulation needs N >= 2");
  }

  const auto cz = automorphism_of(controlled_z(kChain, kNext), D, 5);
  const auto to_z_basis = automorphism_of(Fourier{kChain}, D, 5).inverse();
  for (std::size_t i = 1; i <= N; ++i) {
    const bool bob = i == N;
    p = append_qudits(p, 1);
    p = apply_clifford(p, cz);
    p = on_chain(std::move(p), s.f_G, kChain);
    p = bob ? local(std::move(p), s.f_G, kNext) : on_chain(std::move(p), s.f_G, kNext);
    p = on_chain(std::move(p), s.f_M, kChain);
    p = apply_clifford(p, to_z_basis);
    const MeasuredTensor m = measure_qudit(p, kChain);
    std::size_t frame;
    std::int64_t sign;
    if (i % 2 == 0) {
      frame = kFrameA;
      sign = ((i / 2) % 2 == 0) ? 1 : -1;
    } else {
      frame = kFrameB;
      const std::size_t k = (N + 1 - i) / 2;
      sign = (k % 2 == 0) ? 1 : -1;
    }
    // The next qudit moves into the chain slot.
    p = fold_flip(m, frame, sign);
    p = local(std::move(p), s.f_S, kAlice);
    if (!bob) p = on_chain(std::move(p), s.f_T, kChain);
  }

  // Bob applies X^{c_A} Z^{-c_B} from the classical frame registers.
  const std::size_t bob_qudit = kChain;
  p = apply_clifford(p, automorphism_of(controlled_x(kFrameA, bob_qudit), D, 4));
  p = apply_clifford(p, automorphism_of(controlled_z(kFrameB, bob_qudit, -1), D, 4));
  p = discard_qudits_at(p, {kFrameA, kFrameB});
  const CosetTable reduced = coset_reduce(p, bell_stabilizer(D));
  return CosetStatistics(D, bell_parameters(reduced));
}

}  // namespace qept
