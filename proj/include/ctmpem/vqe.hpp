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

#ifndef CTMPEM_VQE_HPP
#define CTMPEM_VQE_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ctmpem/ctmp_model.hpp"
#include "ctmpem/fermion.hpp"
#include "ctmpem/grouping.hpp"
#include "ctmpem/hubbard.hpp"
#include "ctmpem/mitigation.hpp"
#include "ctmpem/pauli.hpp"
#include "ctmpem/statevector.hpp"

namespace ctmpem {

/// |+>^n followed by `reps` blocks of [RY on every qubit, CZ chain].
struct AnsatzSpec {
  int num_qubits = 1;
  int reps = 6;

  int num_parameters() const { return reps * num_qubits; }
};

/// Throws ArgumentError if theta has the wrong length.
Circuit build_ansatz(const AnsatzSpec &spec, std::span<const double> theta);

enum class EvalMode { noiseless_exact, noiseless_sampled, unmitigated, mitigated };

std::string_view to_string(EvalMode mode);
/// Throws ArgumentError for unknown names.
EvalMode eval_mode_from_string(std::string_view name);

struct EvaluationConfig {
  EvalMode mode = EvalMode::noiseless_exact;
  std::uint64_t shots = 8192;
  std::shared_ptr<const CtmpModel> noise_model;
  std::shared_ptr<const CtmpModel> mitigation_model;
  std::uint64_t seed = 0;
  /// Mitigation samples per group; 0 selects default_mitigation_samples.
  std::uint64_t mitigation_samples = 0;

  /// Throws ConfigError listing every missing or inconsistent field.
  void validate(int num_qubits) const;
};

/// An observable bound to an ansatz, with its measurement groups precomputed.
class Objective {
 public:
  Objective(Observable observable, AnsatzSpec spec);

  const Observable &observable() const { return observable_; }
  const AnsatzSpec &ansatz() const { return spec_; }
  const GroupedObservable &grouped() const { return grouped_; }
  int num_parameters() const { return spec_.num_parameters(); }

  /// Exact <psi(theta)|H|psi(theta)>.
  double exact(std::span<const double> theta) const;

  /// Evaluates in `config.mode`. Sampled modes measure every group with
  /// `shots` shots using sub-streams derived from config.seed per group, so
  /// unmitigated and mitigated runs at one seed see the same noisy counts.
  Estimate evaluate(std::span<const double> theta, const EvaluationConfig &config) const;

 private:
  Observable observable_;
  AnsatzSpec spec_;
  GroupedObservable grouped_;
};

Estimate evaluate_objective(std::span<const double> theta, const Objective &objective,
                            const EvaluationConfig &config);

/// [f(theta + pi/2 e_k) - f(theta - pi/2 e_k)] / 2 for each k. Shifted
/// evaluations in sampled modes use seeds derived from config.seed.
std::vector<double> gradient_parameter_shift(std::span<const double> theta, const Objective &objective,
                                             const EvaluationConfig &config);

struct MinimumResult {
  std::vector<double> theta;
  double value = 0.0;
  int restart = 0;
  int iterations = 0;
  double gradient_norm = 0.0;
};

struct MinimizeOptions {
  int max_iterations = 2000;
  double gradient_tolerance = 1e-5;
};

/// Best of `restarts` gradient-descent runs on the exact objective, each from
/// a uniform random start, with backtracking line search.
MinimumResult find_minimum(const Objective &objective, int restarts, std::uint64_t seed,
                           const MinimizeOptions &options = {});

struct ModeColumn {
  std::string name;
  std::vector<double> values;
  std::vector<double> std_errors;
};

struct SweepResult {
  std::vector<double> s_values;
  std::vector<ModeColumn> columns;
  std::vector<double> direction;
};

/// Unit direction with i.i.d. standard normal entries before normalization.
std::vector<double> random_direction(int dimension, std::uint64_t seed);

/// 41 points uniform in [-2, 2].
std::vector<double> default_s_grid();

/// Evaluates every config at theta0 + s * phi. Point p uses seed
/// derive_seed(config.seed, p) for every mode.
SweepResult sweep_objective(std::span<const double> theta0, std::uint64_t direction_seed,
                            std::span<const double> s_grid, const Objective &objective,
                            std::span<const EvaluationConfig> configs);

struct SamplingConfig {
  std::vector<int> num_sites{1, 2};
  int samples_per_size = 50;
  int reps = 6;
  double t = 1.0;
  double U = 2.0;
  bool periodic = true;
  FermionMapping mapping = FermionMapping::bravyi_kitaev;
  SpinOrdering ordering = SpinOrdering::blocked;
  std::uint64_t shots_per_qubit = 8192;
  /// Restricted to the first 2L qubits for each size.
  std::shared_ptr<const CtmpModel> noise_profile;
  /// Defaults to noise_profile when null.
  std::shared_ptr<const CtmpModel> mitigation_profile;
  std::uint64_t mitigation_samples = 0;
  std::uint64_t seed = 0;
};

struct SampleRow {
  int num_sites = 0;
  int num_qubits = 0;
  int sample_index = 0;
  double exact = 0.0;
  double unmitigated = 0.0;
  double unmitigated_std_error = 0.0;
  double mitigated = 0.0;
  double mitigated_std_error = 0.0;
};

struct SizeSummary {
  int num_sites = 0;
  int num_qubits = 0;
  int samples = 0;
  double std_unmitigated = 0.0;
  double std_mitigated = 0.0;
  double reduction_ratio = 0.0;
};

struct SamplingResult {
  std::vector<SampleRow> rows;
  std::vector<SizeSummary> summaries;
};

/// Random-theta comparison of unmitigated and mitigated errors against the
/// exact objective, 8192*n shots per group by default. Throws ConfigError
/// for fewer than 2 samples per size or a missing noise profile.
SamplingResult random_sampling_experiment(const SamplingConfig &config);

/// Sample standard deviation (n - 1 denominator).
double sample_std(std::span<const double> values);

}  // namespace ctmpem

#endif  // CTMPEM_VQE_HPP
