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
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "qept/repeater.hpp"

namespace qept {

using Cell = std::variant<std::int64_t, double, std::string>;

/// A tidy table: one row per data point.
struct DataTable {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// Doubles are printed with %.17g.
void write_csv(std::ostream& out, const DataTable& table);

/// f_T = 0.05, f_G = 0.001, f_M = 0.01, f_S = 0.0001.
RepeaterScenario standard_rates(Digit D, std::size_t N);

/// Coset probabilities of the [[5,1,3]]_5 line for even N up to max_N.
/// Columns: N, r, s, class (none, X, Z, XZ), probability.
DataTable fig4_dataset(std::size_t max_N = 400);

/// Fidelity and distribution probability of the N = 2 line versus
/// f = f_T = f_abs on the grid 0, 1/steps, ... < 1. Columns: f, series
/// ("unencoded" or "k_max=K"), k_max (-1 when unencoded), fidelity, p_distr.
DataTable fig5_dataset(std::size_t steps = 100);

/// Log-negativity at N = 50 for every [[2d-1,1,d]]_D with 2 <= D <= 100 and
/// D^{2d-1} <= 10^70. Columns: D, d, n, log10_dim, polynomial_code,
/// log_negativity. polynomial_code is 1 when D is prime and d <= (D+1)/2;
/// other points use the abstract code model.
DataTable fig6_dataset();

/// Log-negativity of the N = 50 standard-rate line with a [[2d-1,1,d]]_D code.
double standard_log_negativity(Digit D, std::size_t d);

/// Smallest d with log-negativity above ratio * log2 D, or 0 if none up to d_max.
std::size_t minimal_distance(Digit D, double ratio = 0.99, std::size_t d_max = 100);

/// Columns: D, d_min for 2 <= D <= 23.
DataTable table1_dataset();

/// Columns: k_max, m, alpha for N = 2, n = 13, k_max <= 4, m <= 9, counted by
/// full enumeration.
DataTable table2_dataset();

}  // namespace qept
