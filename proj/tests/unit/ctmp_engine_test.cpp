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


#include <cmath>
#include <vector>

#include "ctmpem/calibration.hpp"
#include "ctmpem/ctmp_model.hpp"
#include "ctmpem/error.hpp"
#include "ctmpem/mitigation.hpp"
#include "ctmpem/noise.hpp"
#include "ctmpem/statevector.hpp"
#include "gtest/gtest.h"
#include "oracles.hpp"

using namespace ctmpem;

namespace {

CtmpModel singles_only(int n, double lo, double hi, RandomStream &rng) {
  std::vector<GeneratorTerm> terms;
  for (int q = 0; q < n; ++q) {
    terms.push_back(GeneratorTerm::single(GeneratorKind::single_excite, q, lo + (hi - lo) * rng.uniform()));
    terms.push_back(GeneratorTerm::single(GeneratorKind::single_decay, q, lo + (hi - lo) * rng.uniform()));
  }
  return CtmpModel(n, terms);
}

double max_outflow(const CtmpModel &m) {
  double best = 0.0;
  for (Bits x = 0; x < (Bits{1} << m.num_qubits()); ++x) best = std::max(best, m.outflow(x));
  return best;
}

}  // namespace

TEST(generator_term, kinds_and_patterns) {
  for (auto kind : {GeneratorKind::single_excite, GeneratorKind::single_decay, GeneratorKind::pair_excite,
                    GeneratorKind::pair_decay, GeneratorKind::exchange_01_10, GeneratorKind::exchange_10_01}) {
    EXPECT_EQ(generator_kind_from_string(to_string(kind)), kind);
  }
  EXPECT_THROW(generator_kind_from_string("pair_flip"), ArgumentError);

  GeneratorTerm swapped = GeneratorTerm::pair(GeneratorKind::exchange_01_10, 3, 1, 0.1);
  EXPECT_EQ(swapped.qubits, (std::array<int, 2>{1, 3}));
  EXPECT_EQ(swapped.kind, GeneratorKind::exchange_10_01);
  EXPECT_EQ(swapped.source_mask(), 0b1010u);
  // qubit 1 = 1, qubit 3 = 0.
  EXPECT_EQ(swapped.source_value(), 0b0010u);

  GeneratorTerm excite = GeneratorTerm::pair(GeneratorKind::pair_excite, 2, 0, 0.1);
  EXPECT_EQ(excite.qubits, (std::array<int, 2>{0, 2}));
  EXPECT_EQ(excite.source_value(), 0u);
}

TEST(ctmp_model, validation) {
  CtmpModel m(3);
  EXPECT_THROW(m.add_term(GeneratorTerm::single(GeneratorKind::single_decay, 3, 0.1)), ArgumentError);
  EXPECT_THROW(m.add_term(GeneratorTerm::single(GeneratorKind::single_decay, 0, -0.1)), ArgumentError);
  EXPECT_THROW(m.add_term(GeneratorTerm::pair(GeneratorKind::pair_decay, 1, 1, 0.1)), ArgumentError);
  m.add_term(GeneratorTerm::pair(GeneratorKind::pair_decay, 0, 1, 0.1));
  EXPECT_THROW(m.add_term(GeneratorTerm::pair(GeneratorKind::pair_decay, 1, 0, 0.2)), ArgumentError);
  EXPECT_FALSE(m.gamma_current());
  EXPECT_THROW(m.gamma(), ConsistencyError);
  m.refresh_gamma();
  EXPECT_DOUBLE_EQ(m.gamma(), 0.1);
  m.set_rate(0, 0.3);
  EXPECT_THROW(m.gamma(), ConsistencyError);
}

TEST(ctmp_model, gamma_examples) {
  CtmpModel one(1, {GeneratorTerm::single(GeneratorKind::single_excite, 0, 0.1),
                    GeneratorTerm::single(GeneratorKind::single_decay, 0, 0.3)});
  EXPECT_DOUBLE_EQ(compute_gamma(one, GammaMode::exact), 0.3);
  EXPECT_DOUBLE_EQ(compute_gamma(one, GammaMode::upper_bound), 0.3);
  EXPECT_EQ(compute_gamma(CtmpModel(5)), 0.0);
  EXPECT_THROW(compute_gamma(CtmpModel(17), GammaMode::exact), SizeError);
  EXPECT_EQ(compute_gamma(CtmpModel(17)), 0.0);
}

TEST(ctmp_model, upper_bound_dominates_exact) {
  RandomStream rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + static_cast<int>(rng.next_u64() % 10);
    RandomStream r = rng.derive(trial);
    CtmpModel m = oracle::random_full_model(n, 0.0, 0.1, r);
    double exact = compute_gamma(m, GammaMode::exact);
    EXPECT_NEAR(exact, max_outflow(m), 1e-15);
    EXPECT_GE(compute_gamma(m, GammaMode::upper_bound), exact - 1e-15);
    for (Bits x = 0; x < (Bits{1} << n); ++x) EXPECT_LE(m.outflow(x), m.gamma() + 1e-15);
  }
}

TEST(ctmp_model, dense_generator) {
  EXPECT_TRUE(dense_generator(CtmpModel(2)).isZero());
  CtmpModel decay(1, {GeneratorTerm::single(GeneratorKind::single_decay, 0, 0.25)});
  Eigen::Matrix2d want;
  want << 0, 0.25, 0, -0.25;
  EXPECT_TRUE(dense_generator(decay).isApprox(want));
  EXPECT_THROW(dense_generator(CtmpModel(11)), SizeError);

  RandomStream rng(42);
  for (int n = 1; n <= 5; ++n) {
    CtmpModel m = oracle::random_full_model(n, 0.0, 0.05, rng);
    Eigen::MatrixXd g = dense_generator(m);
    EXPECT_LT(g.colwise().sum().cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT((g - oracle::dense_generator_reference(m)).cwiseAbs().maxCoeff(), 1e-15);
  }
}

TEST(ctmp_model, exponential_is_stochastic) {
  RandomStream rng(43);
  for (int n = 1; n <= 8; ++n) {
    CtmpModel m = oracle::random_full_model(n, 0.0, 0.05, rng);
    Eigen::MatrixXd a = dense_generator(m).exp();
    EXPECT_GE(a.minCoeff(), -1e-12);
    EXPECT_LT((a.colwise().sum().array() - 1.0).abs().maxCoeff(), 1e-9);
  }
}

TEST(ctmp_model, restricted_and_scaled) {
  RandomStream rng(44);
  CtmpModel m = oracle::random_full_model(4, 0.01, 0.05, rng);
  CtmpModel r = m.restricted(2);
  EXPECT_EQ(r.num_qubits(), 2);
  EXPECT_EQ(r.terms().size(), 2u * 2 + 4u);
  CtmpModel s = m.scaled(2.0);
  EXPECT_NEAR(s.gamma(), 2.0 * m.gamma(), 1e-14);
  EXPECT_EQ(m.find_rate(GeneratorKind::pair_decay, 3, 1), m.find_rate(GeneratorKind::pair_decay, 1, 3));
  EXPECT_FALSE(r.find_rate(GeneratorKind::pair_decay, 1, 3).has_value());
}

TEST(noise, zero_rates_are_identity) {
  CtmpModel m(3, {GeneratorTerm::single(GeneratorKind::single_decay, 0, 0.0)});
  RandomStream rng(45);
  for (Bits x = 0; x < 8; ++x) {
    for (int k = 0; k < 100; ++k) EXPECT_EQ(apply_readout_noise(x, m, rng), x);
  }
}

TEST(noise, single_decay_frequency) {
  const double r = 0.2;
  CtmpModel m(1, {GeneratorTerm::single(GeneratorKind::single_decay, 0, r)});
  CountsMap ideal(1);
  ideal.add(1, 1'000'000);
  RandomStream rng(46);
  CountsMap noisy = apply_readout_noise(ideal, m, rng);
  const double p = 1.0 - std::exp(-r);
  const double sigma = std::sqrt(p * (1 - p) / 1e6);
  EXPECT_NEAR(noisy.count(0) / 1e6, p, 3 * sigma);
}

TEST(noise, matches_matrix_exponential_columns) {
  RandomStream rng(47);
  CtmpModel m = oracle::random_full_model(3, 0.0, 0.05, rng);
  Eigen::MatrixXd a = oracle::dense_assignment(m);
  for (Bits x = 0; x < 8; ++x) {
    CountsMap ideal(3);
    ideal.add(x, 1'000'000);
    CountsMap noisy = apply_readout_noise(ideal, m, rng);
    EXPECT_LT(oracle::total_variation(oracle::empirical_distribution(noisy), a.col(x)), 0.01);
  }
}

TEST(noise, deterministic_and_width_checked) {
  RandomStream rng(48);
  CtmpModel m = oracle::random_full_model(3, 0.0, 0.05, rng);
  CountsMap ideal(3);
  ideal.add(5, 70'000);
  ideal.add(2, 3);
  RandomStream a(1), b(1);
  EXPECT_EQ(apply_readout_noise(ideal, m, a), apply_readout_noise(ideal, m, b));
  EXPECT_THROW(apply_readout_noise(CountsMap(2), m, a), ShapeError);
}

TEST(calibration, labels) {
  EXPECT_EQ(calibration_state_labels(2), (std::vector<Bits>{0b00, 0b01, 0b10, 0b11}));
  EXPECT_EQ(calibration_state_labels(4).size(), 11u);
  EXPECT_EQ(calibration_state_labels(20).size(), 211u);
  EXPECT_EQ(calibration_state_labels(1), (std::vector<Bits>{0, 1}));
  auto labels = calibration_state_labels(6);
  EXPECT_TRUE(std::is_sorted(labels.begin(), labels.end()));
  for (Bits x : labels) EXPECT_LE(std::popcount(x), 2);

  EXPECT_EQ(minimal_calibration_labels(1).size(), 2u);
  EXPECT_EQ(minimal_calibration_labels(4), (std::vector<Bits>{0b0000, 0b0001, 0b0010, 0b0100, 0b1000, 0b1111}));
  EXPECT_EQ(minimal_calibration_labels(20).size(), 22u);
}

TEST(calibration, noiseless_pair_matrix_is_identity) {
  CtmpModel m(3);
  RandomStream rng(49);
  auto labels = calibration_state_labels(3);
  CalibrationSet cal = simulate_calibration(m, labels, 1000, rng);
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) EXPECT_TRUE(pair_assignment_matrix(cal, i, j).isIdentity());
  }
  for (auto &rec : cal.records) {
    EXPECT_EQ(rec.counts.count(rec.label), 1000u);
  }
  CtmpModel fitted = fit_ctmp(cal);
  for (const auto &t : fitted.terms()) EXPECT_EQ(t.rate, 0.0);
  EXPECT_EQ(fitted.gamma(), 0.0);
}

TEST(calibration, pair_matrix_matches_dense_exponential) {
  RandomStream rng(50);
  CtmpModel m = oracle::random_full_model(2, 0.001, 0.05, rng);
  auto labels = calibration_state_labels(2);
  CalibrationSet cal = simulate_calibration(m, labels, 1'000'000, rng);
  Eigen::Matrix4d p = pair_assignment_matrix(cal, 0, 1);
  EXPECT_LT((p.colwise().sum().array() - 1.0).abs().maxCoeff(), 1e-12);
  EXPECT_LT((p - oracle::dense_assignment(m)).cwiseAbs().maxCoeff(), 0.005);
}

TEST(calibration, incomplete_set_names_the_pair) {
  CtmpModel m(3);
  RandomStream rng(51);
  std::vector<Bits> labels{0b000, 0b001, 0b010, 0b100};
  CalibrationSet cal = simulate_calibration(m, labels, 10, rng);
  try {
    pair_assignment_matrix(cal, 0, 2);
    FAIL() << "expected IncompleteCalibrationError";
  } catch (const IncompleteCalibrationError &e) {
    EXPECT_NE(std::string(e.what()).find("(0, 2)"), std::string::npos) << e.what();
  }
  EXPECT_THROW(fit_ctmp(cal), IncompleteCalibrationError);
  EXPECT_NO_THROW(fit_ctmp(simulate_calibration(m, minimal_calibration_labels(3), 10, rng)));
}

TEST(calibration, validation) {
  CalibrationSet cal{2, 10, {}};
  CountsMap c(2);
  c.add(0, 10);
  cal.records.push_back({0, c});
  cal.records.push_back({0, c});
  EXPECT_THROW(cal.validate(), ValidityError);
  cal.records.pop_back();
  CountsMap over(2);
  over.add(1, 11);
  cal.records.push_back({1, over});
  EXPECT_THROW(cal.validate(), ValidityError);
  cal.records.pop_back();
  cal.records.push_back({1, CountsMap(3)});
  EXPECT_THROW(cal.validate(), ValidityError);
}

TEST(calibration, principal_log) {
  Eigen::Matrix2d a;
  a << 0.9, 0.2, 0.1, 0.8;
  Eigen::MatrixXd l = principal_log(a);
  EXPECT_LT((Eigen::MatrixXd(l.exp()) - a).cwiseAbs().maxCoeff(), 1e-12);
  Eigen::Matrix2d singular;
  singular << 0.5, 0.5, 0.5, 0.5;
  EXPECT_THROW(principal_log(singular), FitError);
  Eigen::Matrix2d flip;
  flip << 0.1, 0.9, 0.9, 0.1;
  EXPECT_THROW(principal_log(flip), FitError);
}

TEST(calibration, fit_reports_failing_pair) {
  CalibrationSet cal{2, 100, {}};
  for (Bits label : calibration_state_labels(2)) {
    // Every prepared state reads out as its complement on qubit 0.
    CountsMap c(2);
    c.add(label ^ 1u, 100);
    cal.records.push_back({label, c});
  }
  try {
    fit_ctmp(cal);
    FAIL() << "expected FitError";
  } catch (const FitError &e) {
    EXPECT_NE(std::string(e.what()).find("(0, 1)"), std::string::npos) << e.what();
  }
}

TEST(calibration, null_model_has_small_pair_rates) {
  RandomStream rng(52);
  CtmpModel planted = singles_only(4, 0.001, 0.05, rng);
  auto labels = calibration_state_labels(4);
  FitReport report;
  CtmpModel fitted = fit_ctmp(simulate_calibration(planted, labels, 1'000'000, rng), {}, &report);
  EXPECT_EQ(report.pairs.size(), 6u);
  for (const auto &t : fitted.terms()) {
    if (t.arity() == 2) EXPECT_LT(t.rate, 0.003) << to_string(t.kind);
  }
}

TEST(calibration, fit_is_idempotent) {
  RandomStream rng(53);
  CtmpModel planted = oracle::random_full_model(3, 0.001, 0.05, rng);
  auto labels = calibration_state_labels(3);
  CtmpModel first = fit_ctmp(simulate_calibration(planted, labels, 1'000'000, rng));
  CtmpModel second = fit_ctmp(simulate_calibration(first, labels, 1'000'000, rng));
  ASSERT_EQ(first.terms().size(), second.terms().size());
  for (std::size_t k = 0; k < first.terms().size(); ++k) {
    double a = first.terms()[k].rate, b = second.terms()[k].rate;
    EXPECT_LE(std::abs(a - b), std::max(0.3 * a, 0.002));
  }
}

TEST(mitigation, default_samples) {
  EXPECT_EQ(default_mitigation_samples(0.0, 1000), 1000u);
  EXPECT_EQ(default_mitigation_samples(0.25, 1000), 3000u);
  EXPECT_EQ(default_mitigation_samples(5.0, 1'000'000), kMaxMitigationSamples);
}

TEST(mitigation, zero_noise_returns_raw_expectation) {
  CtmpModel m(2, {GeneratorTerm::single(GeneratorKind::single_decay, 0, 0.0)});
  CountsMap counts(2);
  counts.add(0b00, 300);
  counts.add(0b01, 100);
  counts.add(0b11, 600);
  std::vector<DiagonalTerm> terms{{0b01, 0.5}, {0b11, -1.0}};
  RandomStream rng(54);
  Estimate e = mitigate_expectation(counts, m, terms, 1000, rng);
  EXPECT_EQ(e.value, expectation_from_counts(counts, terms));
  EXPECT_EQ(e.std_error, expectation_std_error(counts, terms));
}

TEST(mitigation, errors) {
  CtmpModel m(2, {GeneratorTerm::single(GeneratorKind::single_decay, 0, 0.1)});
  CountsMap counts(2);
  counts.add(1, 10);
  std::vector<DiagonalTerm> z{{1, 1.0}};
  RandomStream rng(55);
  EXPECT_THROW(mitigate_expectation(counts, m, z, 0, rng), ArgumentError);
  EXPECT_THROW(mitigate_expectation(CountsMap(2), m, z, 10, rng), ArgumentError);
  EXPECT_THROW(mitigate_expectation(CountsMap(3), m, z, 10, rng), ShapeError);
  m.set_rate(0, 0.2);
  EXPECT_THROW(mitigate_expectation(counts, m, z, 10, rng), ConsistencyError);
}

TEST(mitigation, identity_observable) {
  RandomStream rng(56);
  CtmpModel m = oracle::random_full_model(3, 0.0, 0.05, rng);
  CountsMap counts(3);
  counts.add(0b101, 40);
  counts.add(0b011, 60);
  std::vector<DiagonalTerm> id{{0, 1.0}};
  for (int run = 0; run < 5; ++run) {
    Estimate e = mitigate_expectation(counts, m, id, 100'000, rng);
    EXPECT_LE(std::abs(e.value - 1.0), 3 * e.std_error);
  }
}

TEST(mitigation, unbiased_against_dense_inverse) {
  RandomStream rng(57);
  for (int n = 1; n <= 3; ++n) {
    CtmpModel m = oracle::random_full_model(n, 0.0, 0.06, rng);
    std::vector<double> p(1u << n);
    double total = 0.0;
    for (auto &v : p) total += (v = rng.uniform());
    for (auto &v : p) v /= total;
    CountsMap noisy = apply_readout_noise(sample_counts(p, n, 20'000, rng), m, rng);
    std::vector<std::pair<Bits, double>> obs{{1, 1.0}, {low_mask(n), 0.5}};
    std::vector<DiagonalTerm> terms;
    for (auto [mask, w] : obs) terms.push_back({mask, w});
    Eigen::VectorXd corrected = oracle::dense_assignment(m).inverse() * oracle::empirical_distribution(noisy);
    double reference = oracle::diagonal_values(n, obs).dot(corrected);

    std::vector<double> runs;
    for (int r = 0; r < 50; ++r) {
      RandomStream stream = rng.derive(static_cast<std::uint64_t>(r));
      runs.push_back(mitigate_expectation(noisy, m, terms, 20'000, stream).value);
    }
    double mean = 0.0, var = 0.0;
    for (double v : runs) mean += v / runs.size();
    for (double v : runs) var += (v - mean) * (v - mean) / (runs.size() - 1);
    double spread = std::sqrt(var / runs.size());
    EXPECT_LE(std::abs(mean - reference), 3 * spread) << "n=" << n;
  }
}

TEST(mitigation, deterministic_given_seed) {
  RandomStream rng(58);
  CtmpModel m = oracle::random_full_model(3, 0.0, 0.05, rng);
  CountsMap counts(3);
  counts.add(0b110, 500);
  counts.add(0b001, 500);
  std::vector<DiagonalTerm> z{{0b010, 1.0}};
  RandomStream a(9), b(9);
  Estimate ea = mitigate_expectation(counts, m, z, 300'000, a);
  Estimate eb = mitigate_expectation(counts, m, z, 300'000, b);
  EXPECT_EQ(ea.value, eb.value);
  EXPECT_EQ(ea.std_error, eb.std_error);
}
