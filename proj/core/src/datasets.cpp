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


#include "qept/datasets.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "qept/entanglement.hpp"
#include "qept/error.hpp"

namespace qept {

void write_csv(std::ostream& out, const DataTable& table) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    out << (i ? "," : "") << table.columns[i];
  }
  out << '\n';
  char buf[40];
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      if (const auto* v = std::get_if<std::int64_t>(&row[i])) {
        out << *v;
      } else if (const auto* d = std::get_if<double>(&row[i])) {
        std::snprintf(buf, sizeof buf, "%.17g", *d);
        out << buf;
      } else {
        out << std::get<std::string>(row[i]);
      }
    }
    out << '\n';
  }
}

RepeaterScenario standard_rates(Digit D, std::size_t N) {
  RepeaterScenario s;
  s.D = D;
  s.N = N;
  s.f_T = 0.05;
  s.f_G = 0.001;
  s.f_M = 0.01;
  s.f_S = 0.0001;
  return s;
}

DataTable fig4_dataset(std::size_t max_N) {
  DataTable t{{"N", "r", "s", "class", "probability"}, {}};
  RepeaterScenario s = standard_rates(5, 2);
  s.encoding = Encoding::polynomial(5, 3);
  for (std::size_t N = 2; N <= max_N; N += 2) {
    s.N = N;
    const CosetStatistics p = encoded_final_statistics(s);
    for (Digit r = 0; r < 5; ++r) {
      for (Digit c = 0; c < 5; ++c) {
        const char* cls = r == 0 ? (c == 0 ? "none" : "Z") : (c == 0 ? "X" : "XZ");
        t.rows.push_back({std::int64_t(N), std::int64_t(r), std::int64_t(c),
                          std::string(cls), p.at(r, c)});
      }
    }
  }
  return t;
}

DataTable fig5_dataset(std::size_t steps) {
  DataTable t{{"f", "series", "k_max", "fidelity", "p_distr"}, {}};
  for (std::size_t i = 0; i < steps; ++i) {
    const double f = double(i) / steps;
    RepeaterScenario s = standard_rates(13, 2);
    s.f_T = f;
    t.rows.push_back({f, std::string("unencoded"), std::int64_t(-1),
                      fidelity(BellDiagonalState(unencoded_final_statistics(s))), 1.0});
    for (std::size_t k = 0; k <= 4; ++k) {
      s.encoding = Encoding::polynomial(13, 7);
      s.encoding->abortion = Abortion{k, f};
      t.rows.push_back({f, "k_max=" + std::to_string(k), std::int64_t(k),
                        fidelity(BellDiagonalState(encoded_final_statistics(s))),
                        distribution_probability(s)});
    }
  }
  return t;
}

double standard_log_negativity(Digit D, std::size_t d) {
  RepeaterScenario s = standard_rates(D, 50);
  s.encoding = Encoding{2 * d - 1, d, std::nullopt};
  return log_negativity(BellDiagonalState(encoded_final_statistics(s)));
}

DataTable fig6_dataset() {
  DataTable t{{"D", "d", "n", "log10_dim", "polynomial_code", "log_negativity"}, {}};
  for (Digit D = 2; D <= 100; ++D) {
    const double l = std::log10(double(D));
    for (std::size_t d = 1; (2 * d - 1) * l <= 70.0 + 1e-12; ++d) {
      const bool poly = is_prime(D) && 2 * d <= D + 1;
      t.rows.push_back({std::int64_t(D), std::int64_t(d), std::int64_t(2 * d - 1),
                        (2 * d - 1) * l, std::int64_t(poly ? 1 : 0),
                        standard_log_negativity(D, d)});
    }
  }
  return t;
}

std::size_t minimal_distance(Digit D, double ratio, std::size_t d_max) {
  const double target = ratio * std::log2(double(D));
  for (std::size_t d = 1; d <= d_max; ++d) {
    if (standard_log_negativity(D, d) > target) return d;
  }
  return 0;
}

DataTable table1_dataset() {
  DataTable t{{"D", "d_min"}, {}};
  for (Digit D = 2; D <= 23; ++D) {
    t.rows.push_back({std::int64_t(D), std::int64_t(minimal_distance(D))});
  }
  return t;
}

DataTable table2_dataset() {
  DataTable t{{"k_max", "m", "alpha"}, {}};
  for (std::size_t k = 0; k <= 4; ++k) {
    const auto alpha = count_accepted_configurations(2, 13, k, CountMethod::Enumerate);
    for (std::size_t m = 0; m <= 9; ++m) {
      t.rows.push_back({std::int64_t(k), std::int64_t(m), std::int64_t(alpha[m])});
    }
  }
  return t;
}

}  // namespace qept
