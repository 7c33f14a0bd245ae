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

#include "ctmpem/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

#include "ctmpem/error.hpp"

namespace ctmpem {

namespace {

const Json &require(const Json &json, const char *key, const std::string &where) {
  if (!json.is_object() || !json.contains(key)) {
    throw ValidityError(where + ": missing field '" + key + "'");
  }
  return json.at(key);
}

template <typename T>
T get_as(const Json &json, const std::string &where) {
  try {
    return json.get<T>();
  } catch (const Json::exception &e) {
    throw ValidityError(where + ": " + e.what());
  }
}

int get_width(const Json &json, const std::string &where) {
  const Json &n = require(json, "num_qubits", where);
  if (!n.is_number_integer() || n.get<long long>() < 1 || n.get<long long>() > kMaxBitsWidth) {
    throw ValidityError(where + ": num_qubits must be an integer in [1, 63]");
  }
  return n.get<int>();
}

std::string optional_double(const std::optional<double> &v) { return v ? format_double(*v) : ""; }

}  // namespace

std::string format_double(double value) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

Json observable_to_json(const Observable &observable) {
  Json out = Json::array();
  for (const auto &t : observable.terms()) {
    out.push_back({{"pauli_label", pauli_label(t)}, {"coeff_re", t.coefficient.real()}, {"coeff_im", t.coefficient.imag()}});
  }
  return out;
}

Observable observable_from_json(const Json &json) {
  if (!json.is_array() || json.empty()) {
    throw ValidityError("observable: expected a non-empty array of terms");
  }
  std::vector<PauliTerm> terms;
  int width = -1;
  for (std::size_t k = 0; k < json.size(); ++k) {
    const std::string where = "observable[" + std::to_string(k) + "]";
    auto label = get_as<std::string>(require(json[k], "pauli_label", where), where + ".pauli_label");
    double re = get_as<double>(require(json[k], "coeff_re", where), where + ".coeff_re");
    double im = json[k].contains("coeff_im") ? get_as<double>(json[k].at("coeff_im"), where + ".coeff_im") : 0.0;
    PauliTerm t;
    try {
      t = parse_pauli_label(label, Complex{re, im});
    } catch (const ArgumentError &e) {
      throw ValidityError(where + ": " + e.what());
    }
    if (width >= 0 && t.num_qubits != width) {
      throw ValidityError(where + ": label width differs from earlier terms");
    }
    width = t.num_qubits;
    terms.push_back(t);
  }
  return Observable(width, terms);
}

Json model_to_json(const CtmpModel &model) {
  Json terms = Json::array();
  for (const auto &t : model.terms()) {
    Json q = t.arity() == 1 ? Json::array({t.qubits[0]}) : Json::array({t.qubits[0], t.qubits[1]});
    terms.push_back({{"kind", std::string(to_string(t.kind))}, {"qubits", q}, {"rate", t.rate}});
  }
  return {{"num_qubits", model.num_qubits()}, {"terms", terms}};
}

CtmpModel model_from_json(const Json &json) {
  const std::string where = "model";
  const int n = get_width(json, where);
  const Json &terms = require(json, "terms", where);
  if (!terms.is_array()) {
    throw ValidityError("model.terms: expected an array");
  }
  CtmpModel model(n);
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const std::string w = "model.terms[" + std::to_string(k) + "]";
    GeneratorTerm t;
    try {
      t.kind = generator_kind_from_string(get_as<std::string>(require(terms[k], "kind", w), w + ".kind"));
    } catch (const ArgumentError &e) {
      throw ValidityError(w + ": " + e.what());
    }
    auto qubits = get_as<std::vector<int>>(require(terms[k], "qubits", w), w + ".qubits");
    if (static_cast<int>(qubits.size()) != t.arity()) {
      throw ValidityError(w + ".qubits: " + std::string(to_string(t.kind)) + " needs " + std::to_string(t.arity()) +
                          " qubit index(es)");
    }
    t.qubits = {qubits[0], qubits.back()};
    t.rate = get_as<double>(require(terms[k], "rate", w), w + ".rate");
    try {
      model.add_term(t);
    } catch (const ArgumentError &e) {
      throw ValidityError(w + ": " + e.what());
    }
  }
  model.refresh_gamma();
  return model;
}

Json calibration_to_json(const CalibrationSet &cal) {
  Json results = Json::array();
  for (const auto &r : cal.records) {
    Json counts = Json::object();
    for (const auto &[outcome, c] : r.counts.entries()) {
      counts[bits_to_string(outcome, cal.num_qubits)] = c;
    }
    results.push_back({{"label", bits_to_string(r.label, cal.num_qubits)}, {"counts", counts}});
  }
  return {{"num_qubits", cal.num_qubits}, {"shots", cal.shots}, {"results", results}, {"bit_order", "qubit0_rightmost"}};
}

CalibrationSet calibration_from_json(const Json &json) {
  const std::string where = "calibration";
  CalibrationSet cal;
  cal.num_qubits = get_width(json, where);
  const Json &shots = require(json, "shots", where);
  if (!shots.is_number_integer() || shots.get<long long>() < 1) {
    throw ValidityError("calibration.shots: must be a positive integer");
  }
  cal.shots = shots.get<std::uint64_t>();
  bool reversed = false;
  if (json.contains("bit_order")) {
    auto order = get_as<std::string>(json.at("bit_order"), "calibration.bit_order");
    if (order == "qubit0_leftmost") {
      reversed = true;
    } else if (order != "qubit0_rightmost") {
      throw ValidityError("calibration.bit_order: expected qubit0_rightmost or qubit0_leftmost");
    }
  }
  auto parse = [&](std::string text, const std::string &w) {
    if (reversed) std::reverse(text.begin(), text.end());
    try {
      return bits_from_string(text, cal.num_qubits);
    } catch (const ArgumentError &e) {
      throw ValidityError(w + ": " + e.what());
    }
  };
  const Json &results = require(json, "results", where);
  if (!results.is_array()) {
    throw ValidityError("calibration.results: expected an array");
  }
  for (std::size_t k = 0; k < results.size(); ++k) {
    const std::string w = "calibration.results[" + std::to_string(k) + "]";
    Bits label = parse(get_as<std::string>(require(results[k], "label", w), w + ".label"), w + ".label");
    const Json &counts = require(results[k], "counts", w);
    if (!counts.is_object()) {
      throw ValidityError(w + ".counts: expected an object");
    }
    CountsMap cm(cal.num_qubits);
    for (const auto &[key, value] : counts.items()) {
      if (!value.is_number_integer() || value.get<long long>() < 0) {
        throw ValidityError(w + ".counts['" + key + "']: expected a nonnegative integer");
      }
      cm.add(parse(key, w + ".counts"), value.get<std::uint64_t>());
    }
    cal.records.push_back({label, std::move(cm)});
  }
  cal.validate();
  return cal;
}

Json graph_to_json(const CouplingGraph &graph) {
  Json edges = Json::array();
  for (auto [a, b] : graph.edges()) {
    edges.push_back({a, b});
  }
  return {{"num_qubits", graph.num_qubits()}, {"edges", edges}};
}

CouplingGraph graph_from_json(const Json &json) {
  const int n = get_width(json, "graph");
  auto edges = get_as<std::vector<std::pair<int, int>>>(require(json, "edges", "graph"), "graph.edges");
  try {
    return CouplingGraph(n, edges);
  } catch (const ArgumentError &e) {
    throw ValidityError(std::string("graph: ") + e.what());
  }
}

Json read_json_file(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open '" + path.string() + "'");
  }
  try {
    return Json::parse(in);
  } catch (const Json::parse_error &e) {
    throw IoError("cannot parse '" + path.string() + "': " + e.what());
  }
}

void write_file_atomic(const std::filesystem::path &path, const std::string &contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw IoError("cannot write '" + tmp.string() + "'");
    }
    out << contents;
    out.flush();
    if (!out) {
      throw IoError("write to '" + tmp.string() + "' failed");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError("cannot move output into '" + path.string() + "'");
  }
}

void write_json_file(const std::filesystem::path &path, const Json &json) {
  write_file_atomic(path, json.dump(2) + "\n");
}

std::string sweep_to_csv(const SweepResult &result) {
  std::ostringstream out;
  out << "s";
  for (const auto &c : result.columns) out << ',' << c.name;
  for (const auto &c : result.columns) out << ',' << c.name << "_std_error";
  out << '\n';
  for (std::size_t p = 0; p < result.s_values.size(); ++p) {
    out << format_double(result.s_values[p]);
    for (const auto &c : result.columns) out << ',' << format_double(c.values[p]);
    for (const auto &c : result.columns) out << ',' << format_double(c.std_errors[p]);
    out << '\n';
  }
  return out.str();
}

std::string sampling_rows_to_csv(const SamplingResult &result) {
  std::ostringstream out;
  out << "num_sites,num_qubits,sample_index,noiseless_exact,unmitigated,mitigated,unmitigated_error,"
         "mitigated_error,unmitigated_std_error,mitigated_std_error\n";
  for (const auto &r : result.rows) {
    out << r.num_sites << ',' << r.num_qubits << ',' << r.sample_index << ',' << format_double(r.exact) << ','
        << format_double(r.unmitigated) << ',' << format_double(r.mitigated) << ','
        << format_double(r.unmitigated - r.exact) << ',' << format_double(r.mitigated - r.exact) << ','
        << format_double(r.unmitigated_std_error) << ',' << format_double(r.mitigated_std_error) << '\n';
  }
  return out.str();
}

std::string sampling_summary_to_csv(const SamplingResult &result) {
  std::ostringstream out;
  out << "num_sites,num_qubits,samples,std_unmitigated,std_mitigated,reduction_ratio\n";
  for (const auto &s : result.summaries) {
    out << s.num_sites << ',' << s.num_qubits << ',' << s.samples << ',' << format_double(s.std_unmitigated) << ','
        << format_double(s.std_mitigated) << ',' << format_double(s.reduction_ratio) << '\n';
  }
  return out.str();
}

std::string rate_records_to_csv(const GroupedRates &rates) {
  std::ostringstream out;
  out << "kind,distance,qubit_i,qubit_j,rate\n";
  for (const auto &r : rates.pair_records) {
    out << to_string(r.kind) << ',' << (r.distance ? std::to_string(*r.distance) : "unreachable") << ','
        << r.qubit_i << ',' << r.qubit_j << ',' << format_double(r.rate) << '\n';
  }
  for (const auto &r : rates.single_records) {
    out << to_string(r.kind) << ",," << r.qubit_i << ",," << format_double(r.rate) << '\n';
  }
  return out.str();
}

std::string distance_summary_to_csv(const GroupedRates &rates) {
  std::ostringstream out;
  out << "kind,distance,q1,median,q3,count,zeros\n";
  for (const auto &[key, s] : summarize_by_distance(rates.pair_records)) {
    out << to_string(key.first) << ',' << (key.second >= 0 ? std::to_string(key.second) : "unreachable") << ','
        << optional_double(s.q1) << ',' << optional_double(s.median) << ',' << optional_double(s.q3) << ','
        << s.count << ',' << s.zeros << '\n';
  }
  return out.str();
}

std::string comparison_to_csv(const std::vector<ModelComparison> &comparisons) {
  std::ostringstream out;
  out << "model,locality,rate\n";
  for (const auto &c : comparisons) {
    for (double r : c.one_qubit_rates) out << c.name << ',' << to_string(Locality::one_qubit) << ',' << format_double(r) << '\n';
    for (double r : c.two_qubit_rates) out << c.name << ',' << to_string(Locality::two_qubit) << ',' << format_double(r) << '\n';
  }
  return out.str();
}

std::string comparison_summary_to_csv(const std::vector<ModelComparison> &comparisons) {
  std::ostringstream out;
  out << "model,locality,q1,median,q3,count,zeros\n";
  for (const auto &c : comparisons) {
    for (auto [loc, s] : {std::pair{Locality::one_qubit, &c.one_qubit}, std::pair{Locality::two_qubit, &c.two_qubit}}) {
      out << c.name << ',' << to_string(loc) << ',' << optional_double(s->q1) << ',' << optional_double(s->median)
          << ',' << optional_double(s->q3) << ',' << s->count << ',' << s->zeros << '\n';
    }
  }
  return out.str();
}

}  // namespace ctmpem
