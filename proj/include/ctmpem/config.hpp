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


#ifndef CTMPEM_CONFIG_HPP
#define CTMPEM_CONFIG_HPP

#include <cstdint>
#include <filesystem>
#include <memory>
#include <vector>

#include "ctmpem/hubbard.hpp"
#include "ctmpem/io.hpp"
#include "ctmpem/vqe.hpp"

namespace ctmpem {

// Experiment configuration documents. Relative paths resolve against
// `base_dir` (normally the directory holding the config file). Parsing
// collects every problem and throws one ConfigError listing them all.

struct HubbardSpec {
  int num_sites = 2;
  double t = 1.0;
  double U = 2.0;
  bool periodic = true;
  FermionMapping mapping = FermionMapping::bravyi_kitaev;
  SpinOrdering ordering = SpinOrdering::blocked;

  Observable build() const;
};

/// {"sites", "t", "U", "periodic", "mapping", "spin_ordering", "reps",
///  "restarts", "seed", "shots_per_qubit", "modes", "s_grid",
///  "noise_model", "mitigation_model", "mitigation_samples", "output"}
/// "s_grid" is either an array of values or {"min", "max", "points"}.
struct SweepFileConfig {
  HubbardSpec hubbard;
  int reps = 6;
  int restarts = 20;
  std::uint64_t seed = 0;
  std::uint64_t shots_per_qubit = 8192;
  std::vector<EvalMode> modes{EvalMode::noiseless_exact, EvalMode::noiseless_sampled, EvalMode::unmitigated,
                              EvalMode::mitigated};
  std::vector<double> s_grid = default_s_grid();
  /// Restricted to the Hamiltonian's qubits.
  std::shared_ptr<const CtmpModel> noise_model;
  std::shared_ptr<const CtmpModel> mitigation_model;
  std::uint64_t mitigation_samples = 0;
  std::filesystem::path output;
};

SweepFileConfig parse_sweep_config(const Json &json, const std::filesystem::path &base_dir);

/// Minimizes the objective, then sweeps every configured mode through the minimum.
/// Seeds for the minimizer, the direction and the estimators are derived from config.seed.
SweepResult run_sweep(const SweepFileConfig &config, MinimumResult *minimum = nullptr);

/// {"sites": [..], "samples_per_size", "reps", "t", "U", "periodic",
///  "mapping", "shots_per_qubit", "noise_model", "mitigation_model",
///  "mitigation_samples", "seed", "output", "summary_output"}
struct SampleFileConfig {
  SamplingConfig sampling;
  std::filesystem::path output;
  std::filesystem::path summary_output;
};

SampleFileConfig parse_sample_config(const Json &json, const std::filesystem::path &base_dir);

}  // namespace ctmpem

#endif  // CTMPEM_CONFIG_HPP
