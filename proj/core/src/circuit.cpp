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


#include "qept/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <ostream>

#include "qept/channels.hpp"
#include "qept/clifford.hpp"
#include "qept/error.hpp"

namespace qept {

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
           line[i] != '#') {
      ++i;
    }
    out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

[[noreturn]] void parse_fail(std::size_t line, std::size_t column, const std::string& why) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ", column " +
                                         std::to_string(column) + ": " + why);
}

[[noreturn]] void illegal(std::size_t line, const std::string& why) {
  throw Error(ErrorCode::IllegalInstruction, "line " + std::to_string(line) + ": " + why);
}

std::int64_t parse_int(const Token& t, std::size_t line, std::string_view text) {
  std::int64_t v = 0;
  const auto* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, v);
  if (res.ec != std::errc() || res.ptr != end || text.empty()) {
    parse_fail(line, t.column, "expected an integer, got '" + t.text + "'");
  }
  return v;
}

double parse_probability(const Token& t, std::size_t line) {
  double v = 0.0;
  const auto* end = t.text.data() + t.text.size();
  const auto res = std::from_chars(t.text.data(), end, v);
  if (res.ec != std::errc() || res.ptr != end) {
    parse_fail(line, t.column, "expected a number, got '" + t.text + "'");
  }
  if (!(v >= 0.0 && v <= 1.0)) parse_fail(line, t.column, "probability outside [0,1]");
  return v;
}

std::size_t parse_qudit(const Token& t, std::size_t line) {
  std::string_view s = t.text;
  if (!s.empty() && s.front() == 'q') s.remove_prefix(1);
  const std::int64_t v = parse_int(t, line, s);
  if (v < 0) parse_fail(line, t.column, "negative qudit index");
  return static_cast<std::size_t>(v);
}

// Rejoins tokens from `first` on and parses them as one Pauli product.
PauliLabel parse_label(const std::vector<Token>& tokens, std::size_t first,
                       std::size_t last, std::size_t line, Digit D, std::size_t n) {
  if (first >= last) parse_fail(line, tokens[first - 1].column, "missing Pauli label");
  std::string joined;
  for (std::size_t i = first; i < last; ++i) {
    if (i > first) joined += ' ';
    joined += tokens[i].text;
  }
  try {
    return parse_pauli(joined, D, n);
  } catch (const Error& e) {
    parse_fail(line, tokens[first].column, e.what());
  }
}

// Splits "CX^2" into the op name and exponent.
std::pair<std::string, std::optional<std::string>> split_power(const std::string& word) {
  const auto caret = word.find('^');
  if (caret == std::string::npos) return {word, std::nullopt};
  return {word.substr(0, caret), word.substr(caret + 1)};
}

}  // namespace

CircuitProgram parse_circuit(std::string_view text) {
  CircuitProgram prog;
  std::optional<Digit> dim;
  std::optional<std::size_t> qudits;
  std::vector<bool> alive;
  bool reduced = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const auto [name, power] = split_power(tokens[0].text);
    auto expect_args = [&](std::size_t count) {
      if (tokens.size() != count + 1) {
        const std::size_t col = tokens.size() > count + 1 ? tokens[count + 1].column
                                                          : line.size() + 1;
        parse_fail(line_no, col,
                   name + " takes " + std::to_string(count) + " argument(s)");
      }
    };

    if (name == "DIM" || name == "QUDITS") {
      if (!prog.instructions.empty()) {
        parse_fail(line_no, tokens[0].column, name + " must precede instructions");
      }
      expect_args(1);
      const std::int64_t v = parse_int(tokens[1], line_no, tokens[1].text);
      if (name == "DIM") {
        if (dim) parse_fail(line_no, tokens[0].column, "duplicate DIM");
        if (v < 2 || v > 1 << 20) parse_fail(line_no, tokens[1].column, "DIM out of range");
        dim = static_cast<Digit>(v);
      } else {
        if (qudits) parse_fail(line_no, tokens[0].column, "duplicate QUDITS");
        if (v < 1 || v > 64) parse_fail(line_no, tokens[1].column, "QUDITS out of range");
        qudits = static_cast<std::size_t>(v);
        alive.assign(*qudits, true);
      }
      continue;
    }
    if (!dim || !qudits) {
      parse_fail(line_no, tokens[0].column, "DIM and QUDITS must come first");
    }
    prog.D = *dim;
    prog.n = *qudits;
    const Digit D = *dim;
    const std::size_t n = *qudits;
    if (reduced) illegal(line_no, "COSET_REDUCE must be the last instruction");

    Instruction ins{Op::Fourier, line_no, {}, 1, 0.0, {}};
    auto qudit_args = [&](std::size_t from, std::size_t to) {
      for (std::size_t i = from; i < to; ++i) {
        const std::size_t q = parse_qudit(tokens[i], line_no);
        if (q >= n) illegal(line_no, "qudit q" + std::to_string(q) + " out of range");
        if (!alive[q]) illegal(line_no, "qudit q" + std::to_string(q) + " already removed");
        if (std::find(ins.qudits.begin(), ins.qudits.end(), q) != ins.qudits.end()) {
          illegal(line_no, "qudit q" + std::to_string(q) + " repeated");
        }
        ins.qudits.push_back(q);
      }
    };
    auto label_alive = [&](const PauliLabel& label) {
      for (std::size_t q = 0; q < n; ++q) {
        if ((label.x(q) != 0 || label.z(q) != 0) && !alive[q]) {
          illegal(line_no, "label acts on removed qudit q" + std::to_string(q));
        }
      }
    };
    if (power && name != "CX" && name != "CZ") {
      parse_fail(line_no, tokens[0].column, "only CX and CZ take an exponent");
    }

    if (name == "F") {
      expect_args(1);
      qudit_args(1, 2);
    } else if (name == "M") {
      expect_args(2);
      ins.op = Op::Multiply;
      ins.exponent = parse_int(tokens[1], line_no, tokens[1].text);
      if (gcd(static_cast<std::uint64_t>(reduce(ins.exponent, D)), D) != 1) {
        illegal(line_no, "multiplier " + tokens[1].text + " is not invertible mod " +
                             std::to_string(D));
      }
      qudit_args(2, 3);
    } else if (name == "PAULI") {
      ins.op = Op::Pauli;
      ins.labels.push_back(parse_label(tokens, 1, tokens.size(), line_no, D, n));
      label_alive(ins.labels.back());
    } else if (name == "CX" || name == "CZ") {
      expect_args(2);
      ins.op = name == "CX" ? Op::ControlledX : Op::ControlledZ;
      if (power) {
        ins.exponent = parse_int(tokens[0], line_no, *power);
      }
      qudit_args(1, 3);
    } else if (name == "DEP" || name == "DEPX" || name == "DEPZ") {
      if (tokens.size() < 3) parse_fail(line_no, line.size() + 1, name + " needs f and qudits");
      ins.op = name == "DEP" ? Op::Depolarize
               : name == "DEPX" ? Op::DepolarizeX : Op::DepolarizeZ;
      ins.probability = parse_probability(tokens[1], line_no);
      if (name != "DEP") expect_args(2);
      qudit_args(2, tokens.size());
    } else if (name == "MEASX" || name == "MEASZ") {
      expect_args(1);
      ins.op = name == "MEASX" ? Op::MeasureX : Op::MeasureZ;
      qudit_args(1, 2);
      alive[ins.qudits[0]] = false;
    } else if (name == "DISCARD") {
      if (tokens.size() < 2) parse_fail(line_no, line.size() + 1, "DISCARD needs qudits");
      ins.op = Op::Discard;
      qudit_args(1, tokens.size());
      for (auto q : ins.qudits) alive[q] = false;
    } else if (name == "COSET_REDUCE") {
      ins.op = Op::CosetReduce;
      std::size_t start = 1;
      for (std::size_t i = 1; i <= tokens.size(); ++i) {
        if (i == tokens.size() || tokens[i].text == ";") {
          ins.labels.push_back(parse_label(tokens, start, i, line_no, D, n));
          label_alive(ins.labels.back());
          start = i + 1;
        }
      }
      reduced = true;
    } else {
      parse_fail(line_no, tokens[0].column, "unknown instruction '" + tokens[0].text + "'");
    }
    prog.instructions.push_back(std::move(ins));
  }
  if (!dim || !qudits) parse_fail(line_no, 1, "missing DIM or QUDITS header");
  prog.D = *dim;
  prog.n = *qudits;
  return prog;
}

namespace {

// Restricts a label over all original qudits to the live positions.
PauliLabel compress(const PauliLabel& label, const std::vector<std::size_t>& live) {
  PauliLabel out(label.modulus(), live.size());
  for (std::size_t i = 0; i < live.size(); ++i) {
    out.set_x(i, label.x(live[i]));
    out.set_z(i, label.z(live[i]));
  }
  return out;
}

}  // namespace

CircuitResult run_circuit(const CircuitProgram& prog) {
  const Digit D = prog.D;
  CircuitResult result{identity_tensor(D, prog.n), {}, {}, std::nullopt};
  for (std::size_t q = 0; q < prog.n; ++q) result.remaining.push_back(q);
  auto position = [&](std::size_t label) {
    const auto it = std::find(result.remaining.begin(), result.remaining.end(), label);
    return static_cast<std::size_t>(it - result.remaining.begin());
  };
  for (const Instruction& ins : prog.instructions) {
    ErrorProbabilityTensor& p = result.tensor;
    const std::size_t n = p.num_qudits();
    std::vector<std::size_t> pos;
    for (auto q : ins.qudits) pos.push_back(position(q));
    switch (ins.op) {
      case Op::Fourier:
        p = apply_clifford(p, automorphism_of(Fourier{pos[0]}, D, n));
        break;
      case Op::Multiply:
        p = apply_clifford(p, automorphism_of(MultiplyBy{ins.exponent, pos[0]}, D, n));
        break;
      case Op::Pauli:
        p = apply_clifford(p, automorphism_of(
                                  PauliGate{compress(ins.labels[0], result.remaining)}, D, n));
        break;
      case Op::ControlledX:
        p = apply_clifford(p, automorphism_of(controlled_x(pos[0], pos[1], ins.exponent), D, n));
        break;
      case Op::ControlledZ:
        p = apply_clifford(p, automorphism_of(controlled_z(pos[0], pos[1], ins.exponent), D, n));
        break;
      case Op::Depolarize:
        p = apply_channel(p, depolarizing(ins.probability, D, pos.size()), pos);
        break;
      case Op::DepolarizeX:
        p = apply_channel(p, axis_depolarizing(ins.probability, Axis::XOnly, D), pos);
        break;
      case Op::DepolarizeZ:
        p = apply_channel(p, axis_depolarizing(ins.probability, Axis::ZOnly, D), pos);
        break;
      case Op::MeasureX:
      case Op::MeasureZ: {
        if (ins.op == Op::MeasureX) {
          p = apply_clifford(p, automorphism_of(Fourier{pos[0]}, D, n).inverse());
        }
        if (n == 1) illegal(ins.line, "cannot measure the last qudit");
        const MeasuredTensor m = measure_qudit(p, pos[0]);
        result.flips.emplace_back(ins.qudits[0], m.flip_distribution());
        p = m.remaining();
        result.remaining.erase(result.remaining.begin() + pos[0]);
        break;
      }
      case Op::Discard: {
        if (pos.size() >= n) illegal(ins.line, "cannot discard every qudit");
        p = discard_qudits_at(p, pos);
        for (auto q : ins.qudits) {
          result.remaining.erase(result.remaining.begin() + position(q));
        }
        break;
      }
      case Op::CosetReduce: {
        std::vector<PauliLabel> gens;
        for (const auto& l : ins.labels) gens.push_back(compress(l, result.remaining));
        result.reduced = coset_reduce(p, StabilizerBasis(D, n, std::move(gens)));
        break;
      }
    }
  }
  return result;
}

void write_csv(std::ostream& out, const CircuitResult& result) {
  if (result.reduced) {
    write_csv(out, *result.reduced);
  } else {
    write_csv(out, result.tensor);
  }
}

}  // namespace qept
