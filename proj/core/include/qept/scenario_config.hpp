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

#include <string_view>

#include "qept/repeater.hpp"

namespace qept {

// Flat key-value scenario files, one "key = value" per line, '#' comments.
//
//   D = 5
//   N = 50
//   f_T = 0.05
//   f_G = 0.001
//   f_M = 0.01
//   f_S = 0.0001
//   code.d = 3         # enables the encoded pipeline; code.n defaults to 2d-1
//   code.n = 5
//   k_max = 1          # enables abortion
//   f_abs = 0.05       # or f_C together with gamma
//
// Rates default to 0. Throws ConfigError for malformed or conflicting
// entries, and the scenario's own validation errors otherwise.
RepeaterScenario parse_scenario_config(std::string_view text);

}  // namespace qept
