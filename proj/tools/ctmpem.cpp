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


// ctmpem command-line front end.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "ctmpem/calibration.hpp"
#include "ctmpem/characterization.hpp"
#include "ctmpem/config.hpp"
#include "ctmpem/eigensolver.hpp"
#include "ctmpem/error.hpp"
#include "ctmpem/hubbard.hpp"
#include "ctmpem/io.hpp"
#include "ctmpem/parallel.hpp"
#include "ctmpem/random.hpp"
#include "ctmpem/vqe.hpp"

#ifndef CTMPEM_VERSION
#define CTMPEM_VERSION "unknown"
#endif
#ifndef CTMPEM_GIT_DESCRIBE
#define CTMPEM_GIT_DESCRIBE "unknown"
#endif

namespace fs = std::filesystem;
using namespace ctmpem;

namespace {

// Creates missing parent directories of each output path.
void prepare_outputs(std::initializer_list<fs::path> paths) {
  for (const auto &p : paths) {
    if (!p.has_parent_path()) continue;
    std::error_code ec;
    fs::create_directories(p.parent_path(), ec);
    if (ec) throw IoError("cannot create directory '" + p.parent_path().string() + "'");
  }
}

CtmpModel load_model(const fs::path &path) { return model_from_json(read_json_file(path)); }

fs::path config_dir(const fs::path &config) {
  fs::path dir = config.parent_path();
  return dir.empty() ? fs::path(".") : dir;
}

// Plain decimal that always shows a fractional part, so 0 prints as 0.0.
std::string format_energy(double value) {
  std::string s = format_double(value == 0.0 ? 0.0 : value);
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

Json labels_listing(int n) {
  const auto all = calibration_state_labels(n);
  const auto minimal = minimal_calibration_labels(n);
  Json listing = Json::array();
  for (Bits label : all) {
    const bool in_minimal = std::binary_search(minimal.begin(), minimal.end(), label);
    listing.push_back({{"label", bits_to_string(label, n)}, {"minimal", in_minimal}});
  }
  Json extra = Json::array();
  Json minimal_json = Json::array();
  for (Bits label : minimal) {
    minimal_json.push_back(bits_to_string(label, n));
    if (!std::binary_search(all.begin(), all.end(), label)) extra.push_back(bits_to_string(label, n));
  }
  return {{"num_qubits", n},
          {"total", all.size()},
          {"minimal_size", minimal.size()},
          {"labels", listing},
          {"minimal", minimal_json},
          {"minimal_extra", extra}};
}

std::vector<Bits> labels_from_listing(const Json &json, int n) {
  if (!json.is_object() || !json.contains("num_qubits") || !json.contains("labels")) {
    throw ValidityError("label listing needs num_qubits and labels");
  }
  if (json.at("num_qubits").get<int>() != n) {
    throw SizeError("label listing is for " + std::to_string(json.at("num_qubits").get<int>()) +
                    " qubits, expected " + std::to_string(n));
  }
  std::vector<Bits> labels;
  for (const auto &entry : json.at("labels")) {
    labels.push_back(bits_from_string(entry.is_string() ? entry.get<std::string>() : entry.at("label").get<std::string>(), n));
  }
  return labels;
}

Json fit_report_json(const FitReport &report) {
  Json pairs = Json::array();
  for (const auto &p : report.pairs) {
    pairs.push_back({{"i", p.i},
                     {"j", p.j},
                     {"min_eigenvalue_modulus", p.min_eigenvalue_modulus},
                     {"eigenvector_condition", p.eigenvector_condition},
                     {"clipped_mass", p.clipped_mass}});
  }
  return {{"pairs", pairs}};
}

void cmd_gen_calibration(int n, const fs::path &out) {
  prepare_outputs({out});
  Json listing = labels_listing(n);
  write_json_file(out, listing);
  std::cout << "labels " << listing["total"] << ", minimal subset " << listing["minimal_size"] << '\n';
}

void cmd_simulate_calibration(const fs::path &model_path, std::optional<int> qubits, std::uint64_t shots,
                              std::uint64_t seed, const std::optional<fs::path> &labels_path, bool minimal,
                              const fs::path &out) {
  if (shots == 0) throw ArgumentError("--shots must be positive");
  prepare_outputs({out});
  CtmpModel model = load_model(model_path);
  const int n = qubits.value_or(model.num_qubits());
  if (n < 1) throw ArgumentError("--qubits must be at least 1");
  if (n > model.num_qubits()) {
    throw SizeError("model has " + std::to_string(model.num_qubits()) + " qubits, fewer than --qubits " +
                    std::to_string(n));
  }
  if (n < model.num_qubits()) model = model.restricted(n);
  std::vector<Bits> labels;
  if (labels_path) {
    labels = labels_from_listing(read_json_file(*labels_path), n);
  } else {
    labels = minimal ? minimal_calibration_labels(n) : calibration_state_labels(n);
  }
  RandomStream rng(derive_seed(seed, "calibration"));
  CalibrationSet cal = simulate_calibration(model, labels, shots, rng);
  write_json_file(out, calibration_to_json(cal));
  std::cout << "records " << cal.records.size() << ", shots " << shots << '\n';
}

void cmd_fit(const fs::path &calibration, const fs::path &out, const std::optional<fs::path> &report_path,
             bool no_cross_pair) {
  CalibrationSet cal = calibration_from_json(read_json_file(calibration));
  prepare_outputs({out, report_path.value_or(fs::path())});
  FitOptions options;
  options.subtract_cross_pair = !no_cross_pair;
  FitReport report;
  CtmpModel model = fit_ctmp(cal, options, &report);
  write_json_file(out, model_to_json(model));
  if (report_path) write_json_file(*report_path, fit_report_json(report));
  std::cout << "terms " << model.terms().size() << ", gamma " << format_double(model.gamma()) << '\n';
}

void cmd_sweep(const fs::path &config_path) {
  SweepFileConfig config = parse_sweep_config(read_json_file(config_path), config_dir(config_path));
  prepare_outputs({config.output});
  MinimumResult minimum;
  SweepResult result = run_sweep(config, &minimum);
  write_file_atomic(config.output, sweep_to_csv(result));
  std::cout << "minimum " << format_double(minimum.value) << " (restart " << minimum.restart << ")\n";
  for (const auto &column : result.columns) {
    double sum = 0.0;
    for (double v : column.values) sum += v;
    std::cout << column.name << " mean " << format_double(sum / column.values.size()) << '\n';
  }
}

void cmd_sample(const fs::path &config_path) {
  SampleFileConfig config = parse_sample_config(read_json_file(config_path), config_dir(config_path));
  prepare_outputs({config.output, config.summary_output});
  SamplingResult result = random_sampling_experiment(config.sampling);
  write_file_atomic(config.output, sampling_rows_to_csv(result));
  write_file_atomic(config.summary_output, sampling_summary_to_csv(result));
  std::cout << sampling_summary_to_csv(result);
}

void cmd_characterize(const fs::path &model_path, const fs::path &graph_path, const fs::path &out,
                      const fs::path &summary) {
  CtmpModel model = load_model(model_path);
  CouplingGraph graph = graph_from_json(read_json_file(graph_path));
  prepare_outputs({out, summary});
  GroupedRates rates = group_rates(model, graph);
  write_file_atomic(out, rate_records_to_csv(rates));
  write_file_atomic(summary, distance_summary_to_csv(rates));
  std::cout << "pair terms " << rates.pair_records.size() << ", single terms " << rates.single_records.size()
            << '\n';
}

void cmd_compare(const std::vector<std::string> &specs, const fs::path &out, const fs::path &summary) {
  std::vector<std::pair<std::string, CtmpModel>> models;
  for (const auto &spec : specs) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == spec.size()) {
      throw ArgumentError("--model expects name=path, got '" + spec + "'");
    }
    models.emplace_back(spec.substr(0, eq), load_model(spec.substr(eq + 1)));
  }
  prepare_outputs({out, summary});
  auto comparisons = compare_models(models);
  write_file_atomic(out, comparison_to_csv(comparisons));
  write_file_atomic(summary, comparison_summary_to_csv(comparisons));
  std::cout << comparison_summary_to_csv(comparisons);
}

void cmd_exact_energy(const HubbardSpec &spec) {
  std::cout << format_energy(exact_ground_energy(spec.build())) << '\n';
}

// Adds --mapping and --spin-ordering options that parse into the enums.
void add_layout_options(CLI::App *cmd, HubbardSpec &spec) {
  cmd->add_option_function<std::string>(
         "--mapping", [&spec](const std::string &s) { spec.mapping = fermion_mapping_from_string(s); },
         "jordan_wigner or bravyi_kitaev (default bravyi_kitaev)");
  cmd->add_option_function<std::string>(
         "--spin-ordering", [&spec](const std::string &s) { spec.ordering = spin_ordering_from_string(s); },
         "blocked or interleaved (default blocked)");
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"CTMP readout-error simulation, calibration and mitigation"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("ctmpem ") + CTMPEM_VERSION + " (" + CTMPEM_GIT_DESCRIBE + ")");
  unsigned threads = 0;
  app.add_option("--threads", threads, "Maximum worker threads (0 uses all cores)");

  int n = 0;
  fs::path out, summary, model_path, graph_path, calibration, config_path;
  std::optional<fs::path> labels_path, report_path;
  std::optional<int> qubits;
  std::uint64_t shots = 0, seed = 0;
  bool minimal = false, no_cross_pair = false;
  std::vector<std::string> model_specs;
  HubbardSpec hubbard;
  hubbard.num_sites = 1;
  bool open_chain = false;

  auto *gen = app.add_subcommand("gen-calibration", "List calibration state labels");
  gen->add_option("--qubits", n, "Number of qubits")->required()->check(CLI::Range(1, 63));
  gen->add_option("--out", out, "Output JSON listing")->required();

  auto *sim = app.add_subcommand("simulate-calibration", "Simulate noisy calibration circuits");
  sim->add_option("--model", model_path, "CTMP model JSON")->required()->check(CLI::ExistingFile);
  sim->add_option("--qubits", qubits, "Qubits to calibrate (default: model width)");
  sim->add_option("--shots", shots, "Shots per circuit")->required();
  sim->add_option("--seed", seed, "Random seed")->required();
  sim->add_option("--labels", labels_path, "Label listing from gen-calibration")->check(CLI::ExistingFile);
  sim->add_flag("--minimal", minimal, "Use the minimal n+2 label subset");
  sim->add_option("--out", out, "Output calibration JSON")->required();

  auto *fit = app.add_subcommand("fit", "Fit a CTMP model to calibration data");
  fit->add_option("--calibration", calibration, "Calibration JSON")->required()->check(CLI::ExistingFile);
  fit->add_option("--out", out, "Output model JSON")->required();
  fit->add_option("--report", report_path, "Output fit diagnostics JSON");
  fit->add_flag("--no-cross-pair", no_cross_pair, "Skip the cross-pair leakage correction");

  auto *sweep = app.add_subcommand("sweep", "Sweep the VQE objective through its minimum");
  sweep->add_option("--config", config_path, "Sweep config JSON")->required()->check(CLI::ExistingFile);

  auto *sample = app.add_subcommand("sample", "Compare raw and mitigated estimates at random parameters");
  sample->add_option("--config", config_path, "Sampling config JSON")->required()->check(CLI::ExistingFile);

  auto *character = app.add_subcommand("characterize", "Group model rates by coupling-graph distance");
  character->add_option("--model", model_path, "CTMP model JSON")->required()->check(CLI::ExistingFile);
  character->add_option("--graph", graph_path, "Coupling graph JSON")->required()->check(CLI::ExistingFile);
  character->add_option("--out", out, "Output per-term CSV")->required();
  character->add_option("--summary", summary, "Output per-distance summary CSV")->required();

  auto *compare = app.add_subcommand("compare", "Compare 1- and 2-qubit rates across models");
  compare->add_option("--model", model_specs, "name=path, repeatable")->required();
  compare->add_option("--out", out, "Output per-rate CSV")->required();
  compare->add_option("--summary", summary, "Output summary CSV")->required();

  auto *exact = app.add_subcommand("exact-energy", "Print the Hubbard ground-state energy");
  exact->add_option("--sites", hubbard.num_sites, "Number of sites")->required()->check(CLI::Range(1, 8));
  exact->add_option("--t", hubbard.t, "Hopping strength");
  exact->add_option("--U", hubbard.U, "On-site interaction");
  exact->add_flag("--open", open_chain, "Open chain (no periodic wrap)");
  add_layout_options(exact, hubbard);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    std::cerr << "error[usage]: " << e.what() << '\n';
    return 2;
  } catch (const ctmpem::Error &e) {
    std::cerr << "error[" << e.category() << "]: " << e.what() << '\n';
    return 2;
  }

  try {
    if (threads > 0) set_max_threads(threads);
    if (*gen) {
      cmd_gen_calibration(n, out);
    } else if (*sim) {
      cmd_simulate_calibration(model_path, qubits, shots, seed, labels_path, minimal, out);
    } else if (*fit) {
      cmd_fit(calibration, out, report_path, no_cross_pair);
    } else if (*sweep) {
      cmd_sweep(config_path);
    } else if (*sample) {
      cmd_sample(config_path);
    } else if (*character) {
      cmd_characterize(model_path, graph_path, out, summary);
    } else if (*compare) {
      cmd_compare(model_specs, out, summary);
    } else if (*exact) {
      hubbard.periodic = !open_chain;
      cmd_exact_energy(hubbard);
    }
  } catch (const ctmpem::Error &e) {
    std::cerr << "error[" << e.category() << "]: " << e.what() << '\n';
    return 1;
  } catch (const std::exception &e) {
    std::cerr << "error[internal]: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
