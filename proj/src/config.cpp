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


#include "ctmpem/config.hpp"

#include <functional>
#include <set>
#include <string>

#include "ctmpem/error.hpp"
#include "ctmpem/random.hpp"

namespace ctmpem {

namespace {

namespace fs = std::filesystem;

// Reads fields from one JSON object, recording problems instead of throwing.
class FieldReader {
 public:
  FieldReader(const Json &json, fs::path base_dir) : json_(json), base_(std::move(base_dir)) {
    if (!json_.is_object()) {
      problem("<root>", "expected a JSON object");
    }
  }

  void problem(const std::string &field, const std::string &what) { problems_.push_back(field + ": " + what); }

  bool has(const char *key) const { return json_.is_object() && json_.contains(key); }
  const Json &at(const char *key) const { return json_.at(key); }

  void known_fields(std::initializer_list<const char *> keys) {
    if (!json_.is_object()) return;
    std::set<std::string> allowed(keys.begin(), keys.end());
    for (const auto &[key, value] : json_.items()) {
      if (!allowed.count(key)) problem(key, "unknown field");
    }
  }

  template <typename T>
  void number(const char *key, T &out, bool required, std::function<bool(T)> ok, const char *rule) {
    if (!has(key)) {
      if (required) problem(key, "required");
      return;
    }
    const Json &v = at(key);
    bool typed = std::is_integral_v<T> ? v.is_number_integer() : v.is_number();
    if (typed && std::is_unsigned_v<T> && v.is_number_integer() && v.get<long long>() < 0) typed = false;
    if (!typed) {
      problem(key, std::is_integral_v<T> ? "expected an integer" : "expected a number");
      return;
    }
    T value = v.get<T>();
    if (!ok(value)) {
      problem(key, rule);
      return;
    }
    out = value;
  }

  void boolean(const char *key, bool &out) {
    if (!has(key)) return;
    if (!at(key).is_boolean()) {
      problem(key, "expected true or false");
      return;
    }
    out = at(key).get<bool>();
  }

  template <typename T>
  void name(const char *key, T &out, T (*parse)(std::string_view)) {
    if (!has(key)) return;
    if (!at(key).is_string()) {
      problem(key, "expected a string");
      return;
    }
    try {
      out = parse(at(key).get<std::string>());
    } catch (const Error &e) {
      problem(key, e.what());
    }
  }

  fs::path resolve(const std::string &text) const {
    fs::path p(text);
    return p.is_absolute() ? p : base_ / p;
  }

  std::optional<fs::path> path(const char *key, bool required) {
    if (!has(key)) {
      if (required) problem(key, "required");
      return std::nullopt;
    }
    if (!at(key).is_string() || at(key).get<std::string>().empty()) {
      problem(key, "expected a path string");
      return std::nullopt;
    }
    return resolve(at(key).get<std::string>());
  }

  std::shared_ptr<const CtmpModel> model(const char *key, int min_qubits) {
    auto p = path(key, false);
    if (!p) return nullptr;
    if (!fs::exists(*p)) {
      problem(key, "file '" + p->string() + "' does not exist");
      return nullptr;
    }
    try {
      auto m = std::make_shared<CtmpModel>(model_from_json(read_json_file(*p)));
      if (m->num_qubits() < min_qubits) {
        problem(key, "model has " + std::to_string(m->num_qubits()) + " qubits, need at least " +
                         std::to_string(min_qubits));
        return nullptr;
      }
      return m;
    } catch (const Error &e) {
      problem(key, e.what());
      return nullptr;
    }
  }

  void finish() const {
    if (problems_.empty()) return;
    std::string msg;
    for (const auto &p : problems_) msg += (msg.empty() ? "" : "; ") + p;
    throw ConfigError(msg);
  }

 private:
  const Json &json_;
  fs::path base_;
  std::vector<std::string> problems_;
};

template <typename T>
std::function<bool(T)> positive() {
  return [](T v) { return v > 0; };
}

template <typename T>
std::function<bool(T)> any() {
  return [](T) { return true; };
}

}  // namespace

Observable HubbardSpec::build() const { return build_hubbard(num_sites, t, U, periodic, mapping, ordering); }

SweepFileConfig parse_sweep_config(const Json &json, const fs::path &base_dir) {
  FieldReader r(json, base_dir);
  r.known_fields({"sites", "t", "U", "periodic", "mapping", "spin_ordering", "reps", "restarts", "seed",
                  "shots_per_qubit", "modes", "s_grid", "noise_model", "mitigation_model", "mitigation_samples",
                  "output"});
  SweepFileConfig c;
  r.number<int>("sites", c.hubbard.num_sites, true, [](int v) { return v >= 1 && v <= 6; }, "must be in [1, 6]");
  r.number<double>("t", c.hubbard.t, false, any<double>(), "");
  r.number<double>("U", c.hubbard.U, false, any<double>(), "");
  r.boolean("periodic", c.hubbard.periodic);
  r.name<FermionMapping>("mapping", c.hubbard.mapping, fermion_mapping_from_string);
  r.name<SpinOrdering>("spin_ordering", c.hubbard.ordering, spin_ordering_from_string);
  r.number<int>("reps", c.reps, false, positive<int>(), "must be positive");
  r.number<int>("restarts", c.restarts, false, positive<int>(), "must be positive");
  r.number<std::uint64_t>("seed", c.seed, true, any<std::uint64_t>(), "");
  r.number<std::uint64_t>("shots_per_qubit", c.shots_per_qubit, false, positive<std::uint64_t>(),
                          "must be positive");
  r.number<std::uint64_t>("mitigation_samples", c.mitigation_samples, false, any<std::uint64_t>(), "");

  if (r.has("modes")) {
    const Json &modes = r.at("modes");
    if (!modes.is_array() || modes.empty()) {
      r.problem("modes", "expected a non-empty array of mode names");
    } else {
      c.modes.clear();
      for (std::size_t k = 0; k < modes.size(); ++k) {
        const std::string field = "modes[" + std::to_string(k) + "]";
        if (!modes[k].is_string()) {
          r.problem(field, "expected a string");
          continue;
        }
        try {
          c.modes.push_back(eval_mode_from_string(modes[k].get<std::string>()));
        } catch (const Error &e) {
          r.problem(field, e.what());
        }
      }
    }
  }

  if (r.has("s_grid")) {
    const Json &g = r.at("s_grid");
    if (g.is_array()) {
      c.s_grid.clear();
      for (const auto &v : g) {
        if (!v.is_number()) {
          r.problem("s_grid", "array entries must be numbers");
          break;
        }
        c.s_grid.push_back(v.get<double>());
      }
      if (c.s_grid.empty()) r.problem("s_grid", "must not be empty");
    } else if (g.is_object()) {
      double lo = -2.0, hi = 2.0;
      int points = 41;
      bool ok = true;
      for (const char *key : {"min", "max"}) {
        if (g.contains(key) && !g.at(key).is_number()) {
          r.problem(std::string("s_grid.") + key, "expected a number");
          ok = false;
        }
      }
      if (g.contains("points") && (!g.at("points").is_number_integer() || g.at("points").get<long long>() < 1)) {
        r.problem("s_grid.points", "expected a positive integer");
        ok = false;
      }
      if (ok) {
        lo = g.value("min", lo);
        hi = g.value("max", hi);
        points = g.value("points", points);
        if (hi < lo) r.problem("s_grid", "max must not be below min");
        c.s_grid.clear();
        for (int k = 0; k < points; ++k) {
          c.s_grid.push_back(points == 1 ? lo : lo + (hi - lo) * k / (points - 1));
        }
      }
    } else {
      r.problem("s_grid", "expected an array or {min, max, points}");
    }
  }

  const int n = 2 * c.hubbard.num_sites;
  auto noise = r.model("noise_model", n);
  auto mitigation = r.model("mitigation_model", n);
  bool wants_noise = false, wants_mitigation = false;
  for (auto m : c.modes) {
    wants_noise = wants_noise || m == EvalMode::unmitigated || m == EvalMode::mitigated;
    wants_mitigation = wants_mitigation || m == EvalMode::mitigated;
  }
  if (wants_noise && !r.has("noise_model")) r.problem("noise_model", "required by the requested modes");
  if (noise) c.noise_model = std::make_shared<CtmpModel>(noise->restricted(n));
  if (mitigation) {
    c.mitigation_model = std::make_shared<CtmpModel>(mitigation->restricted(n));
  } else if (wants_mitigation && !r.has("mitigation_model")) {
    c.mitigation_model = c.noise_model;
  }
  if (auto out = r.path("output", true)) c.output = *out;
  r.finish();
  return c;
}

SweepResult run_sweep(const SweepFileConfig &config, MinimumResult *minimum) {
  Objective objective(config.hubbard.build(), AnsatzSpec{2 * config.hubbard.num_sites, config.reps});
  MinimumResult best = find_minimum(objective, config.restarts, derive_seed(config.seed, "minimize"));
  std::vector<EvaluationConfig> configs;
  for (EvalMode mode : config.modes) {
    EvaluationConfig c;
    c.mode = mode;
    c.shots = config.shots_per_qubit * static_cast<std::uint64_t>(objective.ansatz().num_qubits);
    c.seed = derive_seed(config.seed, "evaluate");
    c.mitigation_samples = config.mitigation_samples;
    if (mode == EvalMode::unmitigated || mode == EvalMode::mitigated) c.noise_model = config.noise_model;
    if (mode == EvalMode::mitigated) c.mitigation_model = config.mitigation_model;
    configs.push_back(std::move(c));
  }
  SweepResult result =
      sweep_objective(best.theta, derive_seed(config.seed, "direction"), config.s_grid, objective, configs);
  if (minimum) *minimum = std::move(best);
  return result;
}

SampleFileConfig parse_sample_config(const Json &json, const fs::path &base_dir) {
  FieldReader r(json, base_dir);
  r.known_fields({"sites", "samples_per_size", "reps", "t", "U", "periodic", "mapping", "spin_ordering",
                  "shots_per_qubit", "noise_model", "mitigation_model", "mitigation_samples", "seed", "output",
                  "summary_output"});
  SampleFileConfig c;
  SamplingConfig &s = c.sampling;
  int max_sites = 0;
  if (r.has("sites")) {
    const Json &sites = r.at("sites");
    if (!sites.is_array() || sites.empty()) {
      r.problem("sites", "expected a non-empty array of site counts");
    } else {
      s.num_sites.clear();
      for (const auto &v : sites) {
        if (!v.is_number_integer() || v.get<long long>() < 1 || v.get<long long>() > 6) {
          r.problem("sites", "entries must be integers in [1, 6]");
          break;
        }
        s.num_sites.push_back(v.get<int>());
      }
    }
  }
  for (int L : s.num_sites) max_sites = std::max(max_sites, L);
  r.number<int>("samples_per_size", s.samples_per_size, false, [](int v) { return v >= 2; }, "must be at least 2");
  r.number<int>("reps", s.reps, false, positive<int>(), "must be positive");
  r.number<double>("t", s.t, false, any<double>(), "");
  r.number<double>("U", s.U, false, any<double>(), "");
  r.boolean("periodic", s.periodic);
  r.name<FermionMapping>("mapping", s.mapping, fermion_mapping_from_string);
  r.name<SpinOrdering>("spin_ordering", s.ordering, spin_ordering_from_string);
  r.number<std::uint64_t>("shots_per_qubit", s.shots_per_qubit, false, positive<std::uint64_t>(), "must be positive");
  r.number<std::uint64_t>("mitigation_samples", s.mitigation_samples, false, any<std::uint64_t>(), "");
  r.number<std::uint64_t>("seed", s.seed, true, any<std::uint64_t>(), "");
  if (!r.has("noise_model")) r.problem("noise_model", "required");
  s.noise_profile = r.model("noise_model", 2 * max_sites);
  s.mitigation_profile = r.model("mitigation_model", 2 * max_sites);
  if (auto out = r.path("output", true)) c.output = *out;
  if (auto out = r.path("summary_output", true)) c.summary_output = *out;
  r.finish();
  return c;
}

}  // namespace ctmpem
