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


#include "qept/scenario_config.hpp"

#include <charconv>
#include <map>
#include <string>

#include "qept/error.hpp"

namespace qept {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void config_fail(std::size_t line, const std::string& why) {
  throw Error(ErrorCode::ConfigError, "line " + std::to_string(line) + ": " + why);
}

struct Entry {
  std::string value;
  std::size_t line;
};

}  // namespace

RepeaterScenario parse_scenario_config(std::string_view text) {
  static const char* const kKeys[] = {"D",      "N",      "f_T",   "f_G",   "f_M",
                                      "f_S",    "code.n", "code.d", "k_max", "f_abs",
                                      "f_C",    "gamma"};
  std::map<std::string, Entry> entries;
  std::size_t line_no = 0, pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) config_fail(line_no, "expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    bool known = false;
    for (const char* k : kKeys) known = known || key == k;
    if (!known) config_fail(line_no, "unknown key '" + key + "'");
    if (value.empty()) config_fail(line_no, "missing value for '" + key + "'");
    if (!entries.emplace(key, Entry{value, line_no}).second) {
      config_fail(line_no, "duplicate key '" + key + "'");
    }
  }

  auto number = [&](const std::string& key, double fallback) {
    const auto it = entries.find(key);
    if (it == entries.end()) return fallback;
    const std::string& v = it->second.value;
    double out = 0.0;
    const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
    if (res.ec != std::errc() || res.ptr != v.data() + v.size()) {
      config_fail(it->second.line, "'" + key + "' is not a number");
    }
    return out;
  };
  auto integer = [&](const std::string& key) -> std::size_t {
    const auto it = entries.find(key);
    const std::string& v = it->second.value;
    std::uint64_t out = 0;
    const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
    if (res.ec != std::errc() || res.ptr != v.data() + v.size()) {
      config_fail(it->second.line, "'" + key + "' must be a nonnegative integer");
    }
    return static_cast<std::size_t>(out);
  };
  auto has = [&](const char* key) { return entries.count(key) != 0; };

  if (!has("D") || !has("N")) config_fail(line_no, "D and N are required");
  RepeaterScenario s;
  const std::size_t D = integer("D");
  if (D < 2 || D > (1u << 20)) config_fail(entries["D"].line, "D out of range");
  s.D = static_cast<Digit>(D);
  s.N = integer("N");
  s.f_T = number("f_T", 0.0);
  s.f_G = number("f_G", 0.0);
  s.f_M = number("f_M", 0.0);
  s.f_S = number("f_S", 0.0);

  if (has("code.n") && !has("code.d")) {
    config_fail(entries["code.n"].line, "code.n needs code.d");
  }
  if (has("code.d")) {
    Encoding e;
    e.d = integer("code.d");
    if (e.d < 1) config_fail(entries["code.d"].line, "code.d must be at least 1");
    e.n = has("code.n") ? integer("code.n") : 2 * e.d - 1;
    s.encoding = e;
  }
  const bool abort_keys = has("k_max") || has("f_abs") || has("f_C") || has("gamma");
  if (abort_keys) {
    if (!has("k_max")) config_fail(line_no, "abortion settings need k_max");
    if (!s.encoding) config_fail(entries["k_max"].line, "k_max needs code.d");
    if (has("f_abs") && (has("f_C") || has("gamma"))) {
      config_fail(entries["f_abs"].line, "give either f_abs or f_C with gamma");
    }
    if (has("f_C") != has("gamma")) config_fail(line_no, "f_C and gamma go together");
    Abortion a;
    a.k_max = integer("k_max");
    a.f_abs = has("f_C") ? absorption_probability(number("f_C", 0.0), number("gamma", 0.0))
                         : number("f_abs", 0.0);
    s.encoding->abortion = a;
  }
  s.validate();
  return s;
}

}  // namespace qept
