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


// qept command-line front end.
//
//   qept run <circuit-file> [--flips <path>]
//   qept repeater <config-file> [--csv <path>]
//   qept reproduce <fig4|fig5|fig6|table1|table2> [--out <path>]
//   qept verify [--suite oracle|appendixB|table2|all]
//
// Exit status: 0 on success, 1 on invalid input or a failed check, 2 when a
// size limit is hit. EPT_DENSE_CAP overrides the dense table cap.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "qept/circuit.hpp"
#include "qept/datasets.hpp"
#include "qept/entanglement.hpp"
#include "qept/error.hpp"
#include "qept/limits.hpp"
#include "qept/oracle.hpp"
#include "qept/repeater.hpp"
#include "qept/scenario_config.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kCap = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw qept::Error(qept::ErrorCode::InvalidArgument, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Writes to `path`, or to stdout when path is empty.
template <class F>
void emit(const std::string& path, F&& write) {
  if (path.empty()) {
    write(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw qept::Error(qept::ErrorCode::InvalidArgument, "cannot write " + path);
  write(out);
}

int run_command(const std::string& file, const std::string& flips_path) {
  const auto result = qept::run_circuit(qept::parse_circuit(read_file(file)));
  qept::write_csv(std::cout, result);
  if (!flips_path.empty()) {
    emit(flips_path, [&](std::ostream& out) {
      out << "qudit,shift,probability\n";
      char buf[40];
      for (const auto& [q, dist] : result.flips) {
        for (std::size_t k = 0; k < dist.size(); ++k) {
          std::snprintf(buf, sizeof buf, "%.17g", dist[k]);
          out << q << ',' << k << ',' << buf << '\n';
        }
      }
    });
  }
  return kOk;
}

int repeater_command(const std::string& file, const std::string& csv_path) {
  const qept::RepeaterScenario s = qept::parse_scenario_config(read_file(file));
  const qept::CosetStatistics stats = qept::final_statistics(s);
  const qept::BellDiagonalState state(stats);
  nlohmann::ordered_json j;
  j["D"] = s.D;
  j["N"] = s.N;
  j["pipeline"] = !s.encoding ? "unencoded" : (s.encoding->abortion ? "abortion" : "encoded");
  j["fidelity"] = qept::fidelity(state);
  j["log_negativity"] = qept::log_negativity(state);
  j["p00"] = stats.at(0, 0);
  j["p_distr"] = qept::distribution_probability(s);
  std::cout << j.dump(2) << '\n';
  if (!csv_path.empty()) {
    emit(csv_path, [&](std::ostream& out) {
      out << "r,s,probability\n";
      char buf[40];
      for (qept::Digit r = 0; r < s.D; ++r) {
        for (qept::Digit c = 0; c < s.D; ++c) {
          std::snprintf(buf, sizeof buf, "%.17g", stats.at(r, c));
          out << r << ',' << c << ',' << buf << '\n';
        }
      }
    });
  }
  return kOk;
}

int reproduce_command(const std::string& target, const std::string& out_path) {
  qept::DataTable table;
  if (target == "fig4") {
    table = qept::fig4_dataset();
  } else if (target == "fig5") {
    table = qept::fig5_dataset();
  } else if (target == "fig6") {
    std::cerr << "fig6: 2416 grid points, expect about a minute\n";
    table = qept::fig6_dataset();
  } else if (target == "table1") {
    table = qept::table1_dataset();
  } else {
    table = qept::table2_dataset();
  }
  emit(out_path, [&](std::ostream& out) { qept::write_csv(out, table); });
  return kOk;
}

bool report(const std::string& name, bool ok) {
  std::cout << (ok ? "PASS " : "FAIL ") << name << '\n';
  return ok;
}

bool verify_oracle() {
  bool ok = true;
  for (qept::Digit D : {2u, 3u, 5u}) {
    for (std::size_t n : {2u, 3u}) {
      if (D == 5 && n == 3) continue;
      bool all = true;
      for (const auto& g : qept::oracle::library_gates(D, n)) {
        all = all && qept::verify_conjugation(g, qept::automorphism_of(g, D, n));
      }
      ok &= report("conjugation D=" + std::to_string(D) + " n=" + std::to_string(n), all);
    }
  }
  std::mt19937_64 rng(20240601);
  double worst = 0.0;
  const std::pair<qept::Digit, std::size_t> shapes[] = {{2, 2}, {3, 2}, {5, 1}, {2, 3}};
  for (int i = 0; i < 100; ++i) {
    const auto [D, n] = shapes[i % 4];
    const auto steps = qept::oracle::random_circuit(D, n, 10, rng);
    worst = std::max(worst, qept::oracle::circuit_discrepancy(steps, D, n, 2, rng));
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "random circuits (max deviation %.3g)", worst);
  ok &= report(buf, worst < 1e-10);
  return ok;
}

bool verify_twirl() {
  bool ok = true;
  const std::pair<qept::Digit, std::size_t> shapes[] = {{2, 1}, {2, 2}, {3, 1}, {3, 2}, {5, 1}};
  for (const auto& [D, n] : shapes) {
    ok &= report("depolarizing twirl D=" + std::to_string(D) + " n=" + std::to_string(n),
                 qept::verify_depolarizing_discretization(D, n, 5, 7));
  }
  return ok;
}

bool verify_table2() {
  const std::uint64_t expected[5][10] = {
      {1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {1, 26, 13, 0, 0, 0, 0, 0, 0, 0},
      {1, 26, 325, 312, 78, 0, 0, 0, 0, 0},
      {1, 26, 325, 2600, 3510, 1716, 286, 0, 0, 0},
      {1, 26, 325, 2600, 14950, 24596, 17446, 5720, 715, 0},
  };
  bool ok = true;
  for (std::size_t k = 0; k < 5; ++k) {
    const auto alpha = qept::count_accepted_configurations(2, 13, k, qept::CountMethod::Enumerate);
    bool row = true;
    for (std::size_t m = 0; m < 10; ++m) row = row && alpha[m] == expected[k][m];
    ok &= report("alpha(2,13," + std::to_string(k) + ";m)", row);
  }
  return ok;
}

int verify_command(const std::string& suite) {
  bool ok = true;
  if (suite == "oracle" || suite == "all") ok &= verify_oracle();
  if (suite == "appendixB" || suite == "all") ok &= verify_twirl();
  if (suite == "table2" || suite == "all") ok &= verify_table2();
  return ok ? kOk : kInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Error probability tensors for qudit circuits and repeater lines"};
  app.require_subcommand(1);

  std::string circuit_file, flips_path;
  auto* run = app.add_subcommand("run", "Propagate a circuit file and print the tensor as CSV");
  run->add_option("circuit-file", circuit_file)->required();
  run->add_option("--flips", flips_path, "Write measurement shift distributions here");

  std::string config_file, csv_path;
  auto* rep = app.add_subcommand("repeater", "Evaluate a repeater scenario; prints summary JSON");
  rep->add_option("config-file", config_file)->required();
  rep->add_option("--csv", csv_path, "Write the coset table here");

  std::string target, out_path;
  auto* repro = app.add_subcommand("reproduce", "Emit a figure or table dataset as CSV");
  repro->add_option("target", target)
      ->required()
      ->check(CLI::IsMember({"fig4", "fig5", "fig6", "table1", "table2"}));
  repro->add_option("--out", out_path, "Output path (default: stdout)");

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "Run the built-in oracle checks");
  verify->add_option("--suite", suite, "oracle: gates and circuits; appendixB: depolarizing twirl; table2: counts")
      ->check(CLI::IsMember({"oracle", "appendixB", "table2", "all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (const char* cap = std::getenv("EPT_DENSE_CAP")) {
      char* end = nullptr;
      const unsigned long long v = std::strtoull(cap, &end, 10);
      if (end == cap || *end != '\0' || v == 0) {
        std::cerr << "error: EPT_DENSE_CAP must be a positive integer\n";
        return kInvalid;
      }
      qept::set_dense_cap(v);
    }
    if (*run) return run_command(circuit_file, flips_path);
    if (*rep) return repeater_command(config_file, csv_path);
    if (*repro) return reproduce_command(target, out_path);
    return verify_command(suite);
  } catch (const qept::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return qept::is_cap_error(e.code()) ? kCap : kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  }
}
