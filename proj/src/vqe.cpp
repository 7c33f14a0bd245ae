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

#include "ctmpem/vqe.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "ctmpem/error.hpp"
#include "ctmpem/hubbard.hpp"
#include "ctmpem/noise.hpp"
#include "ctmpem/parallel.hpp"

namespace ctmpem {

namespace {

constexpr std::pair<EvalMode, std::string_view> kModeNames[] = {
    {EvalMode::noiseless_exact, "noiseless_exact"},
    {EvalMode::noiseless_sampled, "noiseless_sampled"},
    {EvalMode::unmitigated, "unmitigated"},
    {EvalMode::mitigated, "mitigated"},
};

double norm2(std::span<const double> v) {
  return std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
}

}  // namespace

std::string_view to_string(EvalMode mode) {
  for (auto [m, name] : kModeNames) {
    if (m == mode) return name;
  }
  return "unknown";
}

EvalMode eval_mode_from_string(std::string_view name) {
  for (auto [m, n] : kModeNames) {
    if (n == name) return m;
  }
  throw ArgumentError("unknown evaluation mode '" + std::string(name) + "'");
}

Circuit build_ansatz(const AnsatzSpec &spec, std::span<const double> theta) {
  if (spec.reps < 0) {
    throw ArgumentError("ansatz repetitions must be nonnegative");
  }
  if (static_cast<int>(theta.size()) != spec.num_parameters()) {
    throw ArgumentError("ansatz expects " + std::to_string(spec.num_parameters()) + " parameters, got " +
                        std::to_string(theta.size()));
  }
  const int n = spec.num_qubits;
  Circuit c(n);
  for (int q = 0; q < n; ++q) {
    c.add(Gate::h(q));
  }
  for (int r = 0; r < spec.reps; ++r) {
    for (int q = 0; q < n; ++q) {
      c.add(Gate::ry(q, theta[static_cast<std::size_t>(r * n + q)]));
    }
    for (int q = 0; q + 1 < n; ++q) {
      c.add(Gate::cz(q, q + 1));
    }
  }
  return c;
}

void EvaluationConfig::validate(int num_qubits) const {
  std::vector<std::string> problems;
  const bool sampled = mode != EvalMode::noiseless_exact;
  if (sampled && shots == 0) {
    problems.push_back("shots: must be positive");
  }
  if (mode == EvalMode::unmitigated || mode == EvalMode::mitigated) {
    if (!noise_model) {
      problems.push_back("noise_model: required for mode " + std::string(to_string(mode)));
    } else if (noise_model->num_qubits() != num_qubits) {
      problems.push_back("noise_model: has " + std::to_string(noise_model->num_qubits()) + " qubits, expected " +
                         std::to_string(num_qubits));
    }
  }
  if (mode == EvalMode::mitigated) {
    if (!mitigation_model) {
      problems.push_back("mitigation_model: required for mode mitigated");
    } else if (mitigation_model->num_qubits() != num_qubits) {
      problems.push_back("mitigation_model: has " + std::to_string(mitigation_model->num_qubits()) +
                         " qubits, expected " + std::to_string(num_qubits));
    } else if (!mitigation_model->gamma_current()) {
      problems.push_back("mitigation_model: gamma is stale");
    }
  }
  if (!problems.empty()) {
    std::string msg;
    for (const auto &p : problems) {
      msg += (msg.empty() ? "" : "; ") + p;
    }
    throw ConfigError(msg);
  }
}

Objective::Objective(Observable observable, AnsatzSpec spec)
    : observable_(std::move(observable)), spec_(spec), grouped_(group_observable(observable_)) {
  if (spec_.num_qubits != observable_.num_qubits()) {
    throw ShapeError("ansatz has " + std::to_string(spec_.num_qubits) + " qubits, observable has " +
                     std::to_string(observable_.num_qubits()));
  }
}

double Objective::exact(std::span<const double> theta) const {
  Statevector psi(spec_.num_qubits);
  psi.apply(build_ansatz(spec_, theta));
  return exact_expectation(psi, observable_);
}

Estimate Objective::evaluate(std::span<const double> theta, const EvaluationConfig &config) const {
  config.validate(spec_.num_qubits);
  if (config.mode == EvalMode::noiseless_exact) {
    return {exact(theta), 0.0};
  }
  Statevector prepared(spec_.num_qubits);
  prepared.apply(build_ansatz(spec_, theta));

  const RandomStream root(config.seed);
  const RandomStream sample_root = root.derive("sample");
  const RandomStream noise_root = root.derive("noise");
  const RandomStream mitigate_root = root.derive("mitigate");

  Estimate total{grouped_.offset, 0.0};
  double variance = 0.0;
  for (std::size_t g = 0; g < grouped_.groups.size(); ++g) {
    const MeasurementGroup &group = grouped_.groups[g];
    Statevector rotated = prepared;
    rotated.apply(group.basis_change);
    RandomStream sample_stream = sample_root.derive(g);
    CountsMap counts = sample_counts(rotated, config.shots, sample_stream);
    if (config.mode == EvalMode::unmitigated || config.mode == EvalMode::mitigated) {
      RandomStream noise_stream = noise_root.derive(g);
      counts = apply_readout_noise(counts, *config.noise_model, noise_stream);
    }
    Estimate part;
    if (config.mode == EvalMode::mitigated) {
      const CtmpModel &m = *config.mitigation_model;
      std::uint64_t samples = config.mitigation_samples != 0 ? config.mitigation_samples
                                                             : default_mitigation_samples(m.gamma(), counts.total());
      RandomStream mitigate_stream = mitigate_root.derive(g);
      part = mitigate_expectation(counts, m, group.terms, samples, mitigate_stream);
    } else {
      part = {expectation_from_counts(counts, group.terms), expectation_std_error(counts, group.terms)};
    }
    total.value += part.value;
    variance += part.std_error * part.std_error;
  }
  total.std_error = std::sqrt(variance);
  return total;
}

Estimate evaluate_objective(std::span<const double> theta, const Objective &objective,
                            const EvaluationConfig &config) {
  return objective.evaluate(theta, config);
}

std::vector<double> gradient_parameter_shift(std::span<const double> theta, const Objective &objective,
                                             const EvaluationConfig &config) {
  const std::size_t d = theta.size();
  std::vector<double> grad(d, 0.0);
  std::vector<double> shifted(theta.begin(), theta.end());
  for (std::size_t k = 0; k < d; ++k) {
    EvaluationConfig plus = config;
    EvaluationConfig minus = config;
    plus.seed = derive_seed(config.seed, 2 * k);
    minus.seed = derive_seed(config.seed, 2 * k + 1);
    shifted[k] = theta[k] + std::numbers::pi / 2.0;
    const double f_plus = objective.evaluate(shifted, plus).value;
    shifted[k] = theta[k] - std::numbers::pi / 2.0;
    const double f_minus = objective.evaluate(shifted, minus).value;
    shifted[k] = theta[k];
    grad[k] = (f_plus - f_minus) / 2.0;
  }
  return grad;
}

MinimumResult find_minimum(const Objective &objective, int restarts, std::uint64_t seed,
                           const MinimizeOptions &options) {
  if (restarts < 1) {
    throw ArgumentError("restarts must be at least 1");
  }
  const int d = objective.num_parameters();
  const EvaluationConfig exact_config{};
  std::vector<MinimumResult> runs(static_cast<std::size_t>(restarts));
  parallel_for(runs.size(), [&](std::size_t r) {
    RandomStream stream(derive_seed(seed, r));
    std::vector<double> theta(static_cast<std::size_t>(d));
    for (auto &v : theta) v = 2.0 * std::numbers::pi * stream.uniform();

    double f = objective.exact(theta);
    std::vector<double> g = gradient_parameter_shift(theta, objective, exact_config);
    double step = 0.1;
    int it = 0;
    std::vector<double> trial(theta.size());
    for (; it < options.max_iterations; ++it) {
      const double gn = norm2(g);
      if (gn < options.gradient_tolerance) break;
      // Backtracking (Armijo) line search from twice the last accepted step.
      double alpha = 2.0 * step;
      double f_trial = f;
      bool accepted = false;
      while (alpha > 1e-12) {
        for (std::size_t k = 0; k < theta.size(); ++k) trial[k] = theta[k] - alpha * g[k];
        f_trial = objective.exact(trial);
        if (f_trial <= f - 1e-4 * alpha * gn * gn) {
          accepted = true;
          break;
        }
        alpha /= 2.0;
      }
      if (!accepted) break;
      theta.swap(trial);
      f = f_trial;
      step = alpha;
      g = gradient_parameter_shift(theta, objective, exact_config);
    }
    runs[r] = {theta, f, static_cast<int>(r), it, norm2(g)};
  });
  return *std::min_element(runs.begin(), runs.end(),
                           [](const MinimumResult &a, const MinimumResult &b) { return a.value < b.value; });
}

std::vector<double> random_direction(int dimension, std::uint64_t seed) {
  RandomStream stream(seed);
  std::vector<double> phi(static_cast<std::size_t>(dimension));
  for (auto &v : phi) v = stream.normal();
  const double n = norm2(phi);
  if (n > 0.0) {
    for (auto &v : phi) v /= n;
  }
  return phi;
}

std::vector<double> default_s_grid() {
  std::vector<double> grid(41);
  for (int i = 0; i < 41; ++i) {
    grid[static_cast<std::size_t>(i)] = -2.0 + 0.1 * i;
  }
  return grid;
}

SweepResult sweep_objective(std::span<const double> theta0, std::uint64_t direction_seed,
                            std::span<const double> s_grid, const Objective &objective,
                            std::span<const EvaluationConfig> configs) {
  if (s_grid.empty()) {
    throw ArgumentError("sweep grid must not be empty");
  }
  if (static_cast<int>(theta0.size()) != objective.num_parameters()) {
    throw ArgumentError("theta0 has the wrong length");
  }
  for (const auto &c : configs) {
    c.validate(objective.ansatz().num_qubits);
  }
  SweepResult result;
  result.s_values.assign(s_grid.begin(), s_grid.end());
  result.direction = random_direction(objective.num_parameters(), direction_seed);
  for (const auto &c : configs) {
    ModeColumn column{std::string(to_string(c.mode)), std::vector<double>(s_grid.size()),
                      std::vector<double>(s_grid.size())};
    parallel_for(s_grid.size(), [&](std::size_t p) {
      std::vector<double> theta(theta0.begin(), theta0.end());
      for (std::size_t k = 0; k < theta.size(); ++k) theta[k] += s_grid[p] * result.direction[k];
      EvaluationConfig point = c;
      point.seed = derive_seed(c.seed, p);
      Estimate e = objective.evaluate(theta, point);
      column.values[p] = e.value;
      column.std_errors[p] = e.std_error;
    });
    result.columns.push_back(std::move(column));
  }
  return result;
}

double sample_std(std::span<const double> values) {
  if (values.size() < 2) {
    return 0.0;
  }
  const double mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return std::sqrt(ss / static_cast<double>(values.size() - 1));
}

SamplingResult random_sampling_experiment(const SamplingConfig &config) {
  std::vector<std::string> problems;
  if (config.samples_per_size < 2) problems.push_back("samples_per_size: must be at least 2");
  if (config.num_sites.empty()) problems.push_back("num_sites: must list at least one size");
  if (config.shots_per_qubit == 0) problems.push_back("shots_per_qubit: must be positive");
  if (!config.noise_profile) problems.push_back("noise_profile: required");
  for (int L : config.num_sites) {
    if (L < 1) {
      problems.push_back("num_sites: sizes must be positive");
    } else if (config.noise_profile && config.noise_profile->num_qubits() < 2 * L) {
      problems.push_back("noise_profile: " + std::to_string(config.noise_profile->num_qubits()) +
                         " qubits cannot cover " + std::to_string(2 * L));
    } else if (config.mitigation_profile && config.mitigation_profile->num_qubits() < 2 * L) {
      problems.push_back("mitigation_profile: " + std::to_string(config.mitigation_profile->num_qubits()) +
                         " qubits cannot cover " + std::to_string(2 * L));
    }
  }
  if (!problems.empty()) {
    std::string msg;
    for (const auto &p : problems) msg += (msg.empty() ? "" : "; ") + p;
    throw ConfigError(msg);
  }

  SamplingResult result;
  for (int L : config.num_sites) {
    const int n = 2 * L;
    Objective objective(build_hubbard(L, config.t, config.U, config.periodic, config.mapping, config.ordering),
                        AnsatzSpec{n, config.reps});
    auto noise = std::make_shared<const CtmpModel>(config.noise_profile->restricted(n));
    auto mitigation = config.mitigation_profile
                          ? std::make_shared<const CtmpModel>(config.mitigation_profile->restricted(n))
                          : noise;
    EvaluationConfig unmitigated{EvalMode::unmitigated, config.shots_per_qubit * static_cast<std::uint64_t>(n),
                                 noise, nullptr, 0, 0};
    EvaluationConfig mitigated{EvalMode::mitigated, unmitigated.shots, noise, mitigation, 0,
                               config.mitigation_samples};

    const std::uint64_t size_seed = derive_seed(config.seed, static_cast<std::uint64_t>(L));
    std::vector<SampleRow> rows(static_cast<std::size_t>(config.samples_per_size));
    parallel_for(rows.size(), [&](std::size_t s) {
      const std::uint64_t sample_seed = derive_seed(size_seed, s);
      RandomStream theta_stream(derive_seed(sample_seed, "theta"));
      std::vector<double> theta(static_cast<std::size_t>(objective.num_parameters()));
      for (auto &v : theta) v = 2.0 * std::numbers::pi * theta_stream.uniform();
      EvaluationConfig u = unmitigated;
      EvaluationConfig m = mitigated;
      u.seed = m.seed = derive_seed(sample_seed, "evaluate");
      const Estimate eu = objective.evaluate(theta, u);
      const Estimate em = objective.evaluate(theta, m);
      rows[s] = {L, n, static_cast<int>(s), objective.exact(theta), eu.value, eu.std_error, em.value, em.std_error};
    });

    std::vector<double> err_u;
    std::vector<double> err_m;
    for (const auto &r : rows) {
      err_u.push_back(r.unmitigated - r.exact);
      err_m.push_back(r.mitigated - r.exact);
    }
    SizeSummary summary{L, n, config.samples_per_size, sample_std(err_u), sample_std(err_m), 0.0};
    summary.reduction_ratio = summary.std_mitigated > 0.0 ? summary.std_unmitigated / summary.std_mitigated
                                                          : std::numeric_limits<double>::infinity();
    result.summaries.push_back(summary);
    result.rows.insert(result.rows.end(), rows.begin(), rows.end());
  }
  return result;
}

}  // namespace ctmpem
