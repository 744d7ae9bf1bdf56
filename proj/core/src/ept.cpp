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


#include "qept/ept.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <set>
#include <string>

#include "qept/error.hpp"
#include "qept/limits.hpp"

namespace qept {

namespace {

void check_total(const LabelTable& t) {
  double total = 0.0;
  std::size_t support = 0;
  t.for_each([&](const std::vector<Digit>&, double w) {
    if (w < 0.0) throw Error(ErrorCode::InvalidArgument, "negative probability");
    total += w;
    ++support;
  });
  if (std::abs(total - 1.0) > 1e-12 + 1e-15 * static_cast<double>(support)) {
    throw Error(ErrorCode::InvalidArgument,
                "probabilities sum to " + std::to_string(total));
  }
}

void check_qudit(std::size_t q, std::size_t n) {
  if (q >= n) {
    throw Error(ErrorCode::IndexOutOfRange,
                "qudit " + std::to_string(q) + " of " + std::to_string(n));
  }
}

}  // namespace

ErrorProbabilityTensor::ErrorProbabilityTensor(Digit modulus, std::size_t n,
                                               LabelTable table)
    : n_(n), table_(std::move(table)) {
  if (table_.modulus() != modulus || table_.width() != 2 * n) {
    throw Error(ErrorCode::ShapeMismatch, "tensor table shape");
  }
  check_total(table_);
}

double ErrorProbabilityTensor::at(const PauliLabel& label) const {
  if (label.modulus() != modulus() || label.num_qudits() != n_) {
    throw Error(ErrorCode::ShapeMismatch, "label vs tensor");
  }
  return table_.at(label.digits());
}

ErrorProbabilityTensor identity_tensor(Digit modulus, std::size_t n) {
  LabelTable t(modulus, 2 * n);
  t.add(std::vector<Digit>(2 * n, 0), 1.0);
  return ErrorProbabilityTensor(modulus, n, std::move(t));
}

ErrorProbabilityTensor apply_clifford(const ErrorProbabilityTensor& p,
                                      const CliffordAutomorphism& autom) {
  if (autom.modulus() != p.modulus() || autom.num_qudits() != p.num_qudits()) {
    throw Error(ErrorCode::ShapeMismatch, "automorphism vs tensor");
  }
  const CliffordAutomorphism forward =
      autom.direction() == Direction::Forward ? autom : autom.reversed();
  LabelTable out(p.modulus(), 2 * p.num_qudits());
  std::vector<Digit> image(2 * p.num_qudits());
  p.table().for_each([&](const std::vector<Digit>& d, double w) {
    forward.apply_digits(d.data(), image.data());
    out.add(image, w);
  });
  return ErrorProbabilityTensor(p.modulus(), p.num_qudits(), std::move(out));
}

ErrorProbabilityTensor apply_channel(const ErrorProbabilityTensor& p,
                                     const PauliChannelTable& f) {
  std::vector<std::size_t> all(p.num_qudits());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return apply_channel(p, f, all);
}

ErrorProbabilityTensor apply_channel(const ErrorProbabilityTensor& p,
                                     const PauliChannelTable& f,
                                     const std::vector<std::size_t>& qudits) {
  const Digit D = p.modulus();
  const std::size_t n = p.num_qudits();
  const std::size_t k = f.num_qudits();
  if (f.modulus() != D) throw Error(ErrorCode::ModulusMismatch, "channel vs tensor");
  if (qudits.size() != k) {
    throw Error(ErrorCode::ShapeMismatch, "channel qudit count vs positions");
  }
  for (std::size_t i = 0; i < k; ++i) {
    check_qudit(qudits[i], n);
    for (std::size_t j = 0; j < i; ++j) {
      if (qudits[i] == qudits[j]) {
        throw Error(ErrorCode::InvalidArgument, "repeated channel qudit");
      }
    }
  }
  // Collect the channel support once; it is usually tiny.
  std::vector<std::pair<std::vector<Digit>, double>> kernel;
  f.coeffs().for_each([&](const std::vector<Digit>& d, double w) {
    kernel.emplace_back(d, w);
  });
  LabelTable out(D, 2 * n);
  std::vector<Digit> shifted(2 * n);
  p.table().for_each([&](const std::vector<Digit>& d, double w) {
    for (const auto& [fd, fw] : kernel) {
      shifted = d;
      for (std::size_t i = 0; i < k; ++i) {
        Digit& r = shifted[qudits[i]];
        Digit& s = shifted[n + qudits[i]];
        r = (r + fd[i]) % D;
        s = (s + fd[k + i]) % D;
      }
      out.add(shifted, w * fw);
    }
  });
  return ErrorProbabilityTensor(D, n, std::move(out));
}

MeasuredTensor::MeasuredTensor(Digit modulus, std::size_t remaining_qudits,
                               LabelTable joint)
    : n_(remaining_qudits), joint_(std::move(joint)) {
  if (joint_.modulus() != modulus || joint_.width() != 1 + 2 * n_) {
    throw Error(ErrorCode::ShapeMismatch, "measured table shape");
  }
  check_total(joint_);
}

std::vector<double> MeasuredTensor::flip_distribution() const {
  std::vector<double> out(modulus(), 0.0);
  joint_.for_each([&](const std::vector<Digit>& d, double w) { out[d[0]] += w; });
  return out;
}

ErrorProbabilityTensor MeasuredTensor::remaining() const {
  LabelTable out(modulus(), 2 * n_);
  joint_.for_each([&](const std::vector<Digit>& d, double w) {
    out.add(d.data() + 1, w);
  });
  return ErrorProbabilityTensor(modulus(), n_, std::move(out));
}

MeasuredTensor measure_qudit(const ErrorProbabilityTensor& p, std::size_t qudit) {
  const std::size_t n = p.num_qudits();
  check_qudit(qudit, n);
  LabelTable joint(p.modulus(), 1 + 2 * (n - 1));
  std::vector<Digit> key(1 + 2 * (n - 1));
  p.table().for_each([&](const std::vector<Digit>& d, double w) {
    key[0] = d[qudit];
    std::size_t pos = 1;
    for (std::size_t q = 0; q < n; ++q) {
      if (q != qudit) key[pos++] = d[q];
    }
    for (std::size_t q = 0; q < n; ++q) {
      if (q != qudit) key[pos++] = d[n + q];
    }
    joint.add(key, w);
  });
  return MeasuredTensor(p.modulus(), n - 1, std::move(joint));
}

ErrorProbabilityTensor contract_phase_index(const ErrorProbabilityTensor& p,
                                            std::size_t qudit) {
  const std::size_t n = p.num_qudits();
  check_qudit(qudit, n);
  LabelTable out(p.modulus(), 2 * n);
  std::vector<Digit> key;
  p.table().for_each([&](const std::vector<Digit>& d, double w) {
    key = d;
    key[n + qudit] = 0;
    out.add(key, w);
  });
  return ErrorProbabilityTensor(p.modulus(), n, std::move(out));
}

ErrorProbabilityTensor discard_qudits(const ErrorProbabilityTensor& p,
                                      std::size_t keep) {
  const std::size_t n = p.num_qudits();
  if (keep > n) {
    throw Error(ErrorCode::IndexOutOfRange,
                "cannot keep " + std::to_string(keep) + " of " + std::to_string(n));
  }
  std::vector<std::size_t> drop;
  for (std::size_t q = keep; q < n; ++q) drop.push_back(q);
  return discard_qudits_at(p, drop);
}

ErrorProbabilityTensor discard_qudits_at(const ErrorProbabilityTensor& p,
                                         const std::vector<std::size_t>& qudits) {
  const std::size_t n = p.num_qudits();
  std::vector<bool> dropped(n, false);
  for (auto q : qudits) {
    check_qudit(q, n);
    dropped[q] = true;
  }
  std::vector<std::size_t> kept;
  for (std::size_t q = 0; q < n; ++q) {
    if (!dropped[q]) kept.push_back(q);
  }
  const std::size_t m = kept.size();
  LabelTable out(p.modulus(), 2 * m);
  std::vector<Digit> key(2 * m);
  p.table().for_each([&](const std::vector<Digit>& d, double w) {
    for (std::size_t i = 0; i < m; ++i) {
      key[i] = d[kept[i]];
      key[m + i] = d[n + kept[i]];
    }
    out.add(key, w);
  });
  return ErrorProbabilityTensor(p.modulus(), m, std::move(out));
}

ErrorProbabilityTensor append_qudits(const ErrorProbabilityTensor& p,
                                     std::size_t count) {
  const std::size_t n = p.num_qudits();
  const std::size_t m = n + count;
  LabelTable out(p.modulus(), 2 * m);
  std::vector<Digit> key(2 * m, 0);
  p.table().for_each([&](const std::vector<Digit>& d, double w) {
    for (std::size_t i = 0; i < n; ++i) {
      key[i] = d[i];
      key[m + i] = d[n + i];
    }
    out.add(key, w);
  });
  return ErrorProbabilityTensor(p.modulus(), m, std::move(out));
}

StabilizerBasis::StabilizerBasis(Digit modulus, std::size_t n,
                                 std::vector<PauliLabel> generators)
    : modulus_(modulus), n_(n), generators_(std::move(generators)) {
  for (const auto& g : generators_) {
    if (g.modulus() != modulus || g.num_qudits() != n) {
      throw Error(ErrorCode::ShapeMismatch, "stabilizer generator shape");
    }
  }
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    for (std::size_t j = i + 1; j < generators_.size(); ++j) {
      if (commutation_phase(generators_[i], generators_[j]).value() != 0) {
        throw Error(ErrorCode::NonCommutingGenerators,
                    to_string(generators_[i]) + " and " + to_string(generators_[j]));
      }
    }
  }
}

StabilizerBasis bell_stabilizer(Digit D) {
  return StabilizerBasis(
      D, 2,
      {PauliLabel::from_digits(D, {1, 0, 0, 1}),
       PauliLabel::from_digits(D, {0, 1, 1, 0})});
}

CosetTable::CosetTable(StabilizerBasis basis, std::vector<std::vector<Digit>> span,
                       LabelTable table)
    : basis_(std::move(basis)), span_(std::move(span)), table_(std::move(table)) {}

PauliLabel CosetTable::canonical(const PauliLabel& label) const {
  const Digit D = basis_.modulus();
  if (label.modulus() != D || label.num_qudits() != basis_.num_qudits()) {
    throw Error(ErrorCode::ShapeMismatch, "label vs stabilizer");
  }
  const auto& d = label.digits();
  std::vector<Digit> best = d, candidate(d.size());
  for (const auto& w : span_) {
    for (std::size_t i = 0; i < d.size(); ++i) candidate[i] = (d[i] + w[i]) % D;
    if (candidate < best) best = candidate;
  }
  return PauliLabel::from_digits(D, best);
}

double CosetTable::coset_probability(const PauliLabel& label) const {
  return table_.at(canonical(label).digits());
}

CosetTable coset_reduce(const ErrorProbabilityTensor& p, const StabilizerBasis& s) {
  const Digit D = p.modulus();
  const std::size_t n = p.num_qudits();
  if (s.modulus() != D || s.num_qudits() != n) {
    throw Error(ErrorCode::ShapeMismatch, "stabilizer vs tensor");
  }
  if (checked_pow(D, s.generators().size(), span_cap()) == 0) {
    throw Error(ErrorCode::SpanTooLarge,
                std::to_string(D) + "^" + std::to_string(s.generators().size()) +
                    " span elements exceed " + std::to_string(span_cap()));
  }
  std::set<std::vector<Digit>> span{std::vector<Digit>(2 * n, 0)};
  for (const auto& g : s.generators()) {
    std::set<std::vector<Digit>> next;
    for (const auto& w : span) {
      std::vector<Digit> v = w;
      for (Digit c = 0; c < D; ++c) {
        next.insert(v);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = (v[i] + g.digits()[i]) % D;
      }
    }
    span.swap(next);
  }
  std::vector<std::vector<Digit>> elements(span.begin(), span.end());
  LabelTable reduced(D, 2 * n);
  std::vector<Digit> best(2 * n), candidate(2 * n);
  p.table().for_each([&](const std::vector<Digit>& d, double w) {
    best = d;
    for (const auto& e : elements) {
      for (std::size_t i = 0; i < d.size(); ++i) candidate[i] = (d[i] + e[i]) % D;
      if (candidate < best) best = candidate;
    }
    reduced.add(best, w);
  });
  return CosetTable(s, std::move(elements), std::move(reduced));
}

std::vector<double> bell_parameters(const CosetTable& reduced) {
  const Digit D = reduced.basis().modulus();
  if (reduced.basis().num_qudits() != 2) {
    throw Error(ErrorCode::ShapeMismatch, "Bell parameters need two qudits");
  }
  std::vector<double> out(std::size_t{D} * D, 0.0);
  for (Digit r = 0; r < D; ++r) {
    for (Digit s = 0; s < D; ++s) {
      out[std::size_t{r} * D + s] =
          reduced.coset_probability(PauliLabel::from_digits(D, {0, r, 0, s}));
    }
  }
  return out;
}

Eigen::MatrixXcd to_dense_channel_matrix(const ErrorProbabilityTensor& p,
                                         const Eigen::MatrixXcd& rho) {
  const Digit D = p.modulus();
  const std::size_t n = p.num_qudits();
  const std::size_t dim = oracle_dimension(D, n);
  if (static_cast<std::size_t>(rho.rows()) != dim ||
      static_cast<std::size_t>(rho.cols()) != dim) {
    throw Error(ErrorCode::ShapeMismatch, "density matrix dimension");
  }
  std::vector<std::vector<Digit>> basis(dim, std::vector<Digit>(n));
  for (std::size_t k = 0; k < dim; ++k) {
    std::size_t rem = k;
    for (std::size_t q = n; q-- > 0;) {
      basis[k][q] = static_cast<Digit>(rem % D);
      rem /= D;
    }
  }
  std::vector<std::complex<double>> roots(D);
  for (Digit j = 0; j < D; ++j) {
    const double a = 2.0 * std::numbers::pi * j / D;
    roots[j] = {std::cos(a), std::sin(a)};
  }
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  std::vector<std::size_t> image(dim);
  std::vector<Digit> phase(dim);
  p.table().for_each([&](const std::vector<Digit>& d, double w) {
    // M|k> = omega^{k.s} |k + r>.
    for (std::size_t k = 0; k < dim; ++k) {
      std::size_t idx = 0;
      std::uint64_t ph = 0;
      for (std::size_t q = 0; q < n; ++q) {
        idx = idx * D + (basis[k][q] + d[q]) % D;
        ph += std::uint64_t{basis[k][q]} * d[n + q];
      }
      image[k] = idx;
      phase[k] = static_cast<Digit>(ph % D);
    }
    for (std::size_t k = 0; k < dim; ++k) {
      for (std::size_t l = 0; l < dim; ++l) {
        out(image[k], image[l]) +=
            w * roots[(phase[k] + D - phase[l]) % D] * rho(k, l);
      }
    }
  });
  return out;
}

namespace {

void write_rows(std::ostream& out, const LabelTable& t, std::size_t n) {
  for (std::size_t i = 1; i <= n; ++i) out << "r_" << i << ',';
  for (std::size_t i = 1; i <= n; ++i) out << "s_" << i << ',';
  out << "probability\n";
  char buf[40];
  t.for_each([&](const std::vector<Digit>& d, double w) {
    for (auto v : d) out << v << ',';
    std::snprintf(buf, sizeof buf, "%.17g", w);
    out << buf << '\n';
  });
}

}  // namespace

void write_csv(std::ostream& out, const ErrorProbabilityTensor& p) {
  write_rows(out, p.table(), p.num_qudits());
}

void write_csv(std::ostream& out, const CosetTable& reduced) {
  write_rows(out, reduced.table(), reduced.basis().num_qudits());
}

}  // namespace qept
