// Copyright 2026 The ctmpem Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ctmpem/calibration.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <set>
#include <string>

#include <Eigen/Eigenvalues>

#include "ctmpem/error.hpp"
#include "ctmpem/noise.hpp"

namespace ctmpem {

namespace {

void check_width(int n) {
  if (n < 1 || n > kMaxBitsWidth) {
    throw SizeError("calibration width " + std::to_string(n) + " out of range");
  }
}

std::string pair_name(int i, int j) { return "(" + std::to_string(i) + ", " + std::to_string(j) + ")"; }

// Index of the two-bit pattern (bit of i, bit of j).
constexpr int pattern(int bit_i, int bit_j) { return bit_i + 2 * bit_j; }

int restrict_pair(Bits x, int i, int j) { return pattern(test_bit(x, i) ? 1 : 0, test_bit(x, j) ? 1 : 0); }

struct PrincipalLog {
  Eigen::MatrixXd log;
  double min_modulus = 0.0;
  double condition = 0.0;
};

PrincipalLog principal_log_detail(const Eigen::MatrixXd &matrix) {
  Eigen::EigenSolver<Eigen::MatrixXd> solver(matrix);
  if (solver.info() != Eigen::Success) {
    throw FitError("eigendecomposition did not converge");
  }
  const Eigen::VectorXcd lambda = solver.eigenvalues();
  const Eigen::MatrixXcd vectors = solver.eigenvectors();
  PrincipalLog out;
  out.min_modulus = std::numeric_limits<double>::infinity();
  Eigen::VectorXcd log_lambda(lambda.size());
  for (Eigen::Index k = 0; k < lambda.size(); ++k) {
    const std::complex<double> l = lambda[k];
    out.min_modulus = std::min(out.min_modulus, std::abs(l));
    if (std::abs(l) < 1e-8) {
      throw FitError("eigenvalue with modulus below 1e-8; the matrix has no logarithm");
    }
    if (l.real() < 0.0) {
      throw FitError("eigenvalue with negative real part; no real principal logarithm");
    }
    log_lambda[k] = std::log(l);
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(vectors);
  const auto &sv = svd.singularValues();
  out.condition = sv[sv.size() - 1] > 0.0 ? sv[0] / sv[sv.size() - 1] : std::numeric_limits<double>::infinity();
  Eigen::MatrixXcd log_c = vectors * log_lambda.asDiagonal() * vectors.inverse();
  out.log = log_c.real();
  return out;
}

}  // namespace

std::vector<Bits> calibration_state_labels(int num_qubits) {
  check_width(num_qubits);
  std::vector<Bits> labels{0};
  for (int i = 0; i < num_qubits; ++i) {
    labels.push_back(bit(i));
    for (int j = i + 1; j < num_qubits; ++j) {
      labels.push_back(bit(i) | bit(j));
    }
  }
  std::sort(labels.begin(), labels.end());
  return labels;
}

std::vector<Bits> minimal_calibration_labels(int num_qubits) {
  check_width(num_qubits);
  std::set<Bits> labels{0, low_mask(num_qubits)};
  for (int i = 0; i < num_qubits; ++i) {
    labels.insert(bit(i));
  }
  return {labels.begin(), labels.end()};
}

void CalibrationSet::validate() const {
  check_width(num_qubits);
  if (shots == 0) {
    throw ValidityError("calibration shots must be positive");
  }
  std::set<Bits> seen;
  for (const auto &r : records) {
    if ((r.label & ~low_mask(num_qubits)) != 0) {
      throw ValidityError("calibration label " + std::to_string(r.label) + " exceeds the register width");
    }
    if (!seen.insert(r.label).second) {
      throw ValidityError("duplicate calibration label " + bits_to_string(r.label, num_qubits));
    }
    if (r.counts.num_qubits() != num_qubits) {
      throw ValidityError("counts width differs for label " + bits_to_string(r.label, num_qubits));
    }
    if (r.counts.total() > shots) {
      throw ValidityError("label " + bits_to_string(r.label, num_qubits) + " has more counts than declared shots");
    }
  }
}

CalibrationSet simulate_calibration(const CtmpModel &model, std::span<const Bits> labels, std::uint64_t shots,
                                    RandomStream &rng) {
  if (shots == 0) {
    throw ArgumentError("shots must be at least 1");
  }
  CalibrationSet cal;
  cal.num_qubits = model.num_qubits();
  cal.shots = shots;
  for (std::size_t r = 0; r < labels.size(); ++r) {
    CountsMap ideal(cal.num_qubits);
    ideal.add(labels[r], shots);
    RandomStream stream = rng.derive(static_cast<std::uint64_t>(r));
    cal.records.push_back({labels[r], apply_readout_noise(ideal, model, stream)});
  }
  cal.validate();
  return cal;
}

Eigen::Matrix4d pair_assignment_matrix(const CalibrationSet &cal, int i, int j) {
  if (i == j || i < 0 || j < 0 || i >= cal.num_qubits || j >= cal.num_qubits) {
    throw ArgumentError("invalid qubit pair " + pair_name(i, j));
  }
  Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
  for (const auto &r : cal.records) {
    const int in = restrict_pair(r.label, i, j);
    for (const auto &[outcome, c] : r.counts.entries()) {
      m(restrict_pair(outcome, i, j), in) += static_cast<double>(c);
    }
  }
  static constexpr const char *kPatternText[] = {"00", "10", "01", "11"};
  for (int in = 0; in < 4; ++in) {
    double total = m.col(in).sum();
    if (total <= 0.0) {
      throw IncompleteCalibrationError("calibration is incomplete for pair " + pair_name(i, j) +
                                       ": no counts for input pattern (q" + std::to_string(i) + ", q" +
                                       std::to_string(j) + ") = " + kPatternText[in]);
    }
    m.col(in) /= total;
  }
  return m;
}

Eigen::MatrixXd principal_log(const Eigen::MatrixXd &matrix) { return principal_log_detail(matrix).log; }

CtmpModel fit_ctmp(const CalibrationSet &cal, const FitOptions &options, FitReport *report) {
  cal.validate();
  const int n = cal.num_qubits;
  CtmpModel model(n);

  if (n == 1) {
    Eigen::Matrix2d a = Eigen::Matrix2d::Zero();
    for (const auto &r : cal.records) {
      for (const auto &[outcome, c] : r.counts.entries()) {
        a(static_cast<Eigen::Index>(outcome & 1), static_cast<Eigen::Index>(r.label & 1)) += static_cast<double>(c);
      }
    }
    for (int in = 0; in < 2; ++in) {
      if (a.col(in).sum() <= 0.0) {
        throw IncompleteCalibrationError("calibration is incomplete for qubit 0: input " + std::to_string(in) +
                                         " never prepared");
      }
      a.col(in) /= a.col(in).sum();
    }
    PrincipalLog lg;
    try {
      lg = principal_log_detail(a);
    } catch (const FitError &e) {
      throw FitError(std::string("qubit 0: ") + e.what());
    }
    model.add_term(GeneratorTerm::single(GeneratorKind::single_excite, 0, std::max(0.0, lg.log(1, 0))));
    model.add_term(GeneratorTerm::single(GeneratorKind::single_decay, 0, std::max(0.0, lg.log(0, 1))));
    model.refresh_gamma();
    return model;
  }

  struct PairFit {
    Eigen::Matrix4d log;
    // share[pattern][k]: fraction of pooled shots whose prepared label has
    // qubit k set.
    std::array<std::vector<double>, 4> share;
  };
  std::map<std::pair<int, int>, PairFit> fits;
  std::vector<GeneratorTerm> pair_terms;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Eigen::Matrix4d a = pair_assignment_matrix(cal, i, j);
      PrincipalLog lg;
      try {
        lg = principal_log_detail(a);
      } catch (const FitError &e) {
        throw FitError("pair " + pair_name(i, j) + ": " + e.what());
      }
      PairFit fit;
      fit.log = lg.log;
      double clipped = 0.0;
      for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
          if (r != c && fit.log(r, c) < 0.0) {
            clipped += -fit.log(r, c);
            fit.log(r, c) = 0.0;
          }
        }
      }
      std::array<double, 4> pooled{};
      for (auto &s : fit.share) s.assign(static_cast<std::size_t>(n), 0.0);
      for (const auto &rec : cal.records) {
        const int in = restrict_pair(rec.label, i, j);
        const double w = static_cast<double>(rec.counts.total());
        pooled[static_cast<std::size_t>(in)] += w;
        for (int k = 0; k < n; ++k) {
          if (test_bit(rec.label, k)) fit.share[static_cast<std::size_t>(in)][static_cast<std::size_t>(k)] += w;
        }
      }
      for (int p = 0; p < 4; ++p) {
        for (auto &v : fit.share[static_cast<std::size_t>(p)]) v /= pooled[static_cast<std::size_t>(p)];
      }
      if (report != nullptr) {
        report->pairs.push_back({i, j, lg.min_modulus, lg.condition, clipped});
      }
      pair_terms.push_back(GeneratorTerm::pair(GeneratorKind::pair_excite, i, j, fit.log(pattern(1, 1), pattern(0, 0))));
      pair_terms.push_back(GeneratorTerm::pair(GeneratorKind::pair_decay, i, j, fit.log(pattern(0, 0), pattern(1, 1))));
      pair_terms.push_back(
          GeneratorTerm::pair(GeneratorKind::exchange_01_10, i, j, fit.log(pattern(1, 0), pattern(0, 1))));
      pair_terms.push_back(
          GeneratorTerm::pair(GeneratorKind::exchange_10_01, i, j, fit.log(pattern(0, 1), pattern(1, 0))));
      fits.emplace(std::make_pair(i, j), std::move(fit));
    }
  }

  // Rate of the pair term on (q, k) that moves q from `from` with k at `kbit`.
  CtmpModel pair_model(n, pair_terms);
  auto pair_rate_moving = [&](int q, int from, int k, int kbit) -> double {
    Bits x = (from ? bit(q) : 0) | (kbit ? bit(k) : 0);
    double total = 0.0;
    for (GeneratorKind kind : {GeneratorKind::pair_excite, GeneratorKind::pair_decay, GeneratorKind::exchange_01_10,
                               GeneratorKind::exchange_10_01}) {
      GeneratorTerm t = GeneratorTerm::pair(kind, q, k, 0.0);
      if ((x & t.source_mask()) == t.source_value()) {
        total += pair_model.find_rate(kind, q, k).value_or(0.0);
      }
    }
    return total;
  };

  std::vector<GeneratorTerm> single_terms;
  for (int q = 0; q < n; ++q) {
    for (int from = 0; from < 2; ++from) {
      double sum = 0.0;
      int samples = 0;
      for (int p = 0; p < n; ++p) {
        if (p == q) continue;
        const bool q_first = q < p;
        const PairFit &fit = fits.at(q_first ? std::make_pair(q, p) : std::make_pair(p, q));
        for (int b = 0; b < 2; ++b) {
          const int src = q_first ? pattern(from, b) : pattern(b, from);
          const int dst = q_first ? pattern(1 - from, b) : pattern(b, 1 - from);
          double rate = fit.log(dst, src);
          if (options.subtract_cross_pair) {
            const auto &share = fit.share[static_cast<std::size_t>(src)];
            for (int k = 0; k < n; ++k) {
              if (k == q || k == p) continue;
              const double on = share[static_cast<std::size_t>(k)];
              rate -= on * pair_rate_moving(q, from, k, 1) + (1.0 - on) * pair_rate_moving(q, from, k, 0);
            }
          }
          sum += rate;
          ++samples;
        }
      }
      const GeneratorKind kind = from == 0 ? GeneratorKind::single_excite : GeneratorKind::single_decay;
      single_terms.push_back(GeneratorTerm::single(kind, q, std::max(0.0, sum / samples)));
    }
  }

  for (const auto &t : single_terms) model.add_term(t);
  for (const auto &t : pair_terms) model.add_term(t);
  model.refresh_gamma();
  return model;
}

}  // namespace ctmpem
