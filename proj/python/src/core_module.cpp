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


// Python bindings. Structured data crosses the boundary as JSON text; the
// ctmpem package wraps these calls with dict-based helpers.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "ctmpem/calibration.hpp"
#include "ctmpem/characterization.hpp"
#include "ctmpem/config.hpp"
#include "ctmpem/eigensolver.hpp"
#include "ctmpem/error.hpp"
#include "ctmpem/hubbard.hpp"
#include "ctmpem/io.hpp"
#include "ctmpem/mitigation.hpp"
#include "ctmpem/noise.hpp"
#include "ctmpem/parallel.hpp"
#include "ctmpem/random.hpp"
#include "ctmpem/vqe.hpp"

namespace py = pybind11;
using namespace ctmpem;

namespace {

CountsMap counts_from_dict(const std::map<std::string, std::uint64_t> &counts, int n) {
  CountsMap out(n);
  for (const auto &[label, c] : counts) out.add(bits_from_string(label, n), c);
  return out;
}

std::map<std::string, std::uint64_t> counts_to_dict(const CountsMap &counts) {
  std::map<std::string, std::uint64_t> out;
  for (const auto &[outcome, c] : counts.entries()) out[bits_to_string(outcome, counts.num_qubits())] = c;
  return out;
}

std::vector<std::string> label_strings(const std::vector<Bits> &labels, int n) {
  std::vector<std::string> out;
  for (Bits b : labels) out.push_back(bits_to_string(b, n));
  return out;
}

Observable hubbard(int sites, double t, double U, bool periodic, const std::string &mapping,
                   const std::string &ordering) {
  return build_hubbard(sites, t, U, periodic, fermion_mapping_from_string(mapping),
                       spin_ordering_from_string(ordering));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "CTMP readout-error simulation, calibration and mitigation";
  m.attr("__version__") = CTMPEM_VERSION;

  // Leaked on purpose so the type outlives interpreter shutdown.
  static PyObject *error_type = py::exception<Error>(m, "Error", PyExc_RuntimeError).release().ptr();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error &e) {
      PyErr_SetString(error_type, (std::string(e.category()) + ": " + e.what()).c_str());
    }
  });

  py::class_<CtmpModel>(m, "Model")
      .def_static("from_json", [](const std::string &text) { return model_from_json(Json::parse(text)); })
      .def("to_json", [](const CtmpModel &model) { return model_to_json(model).dump(); })
      .def_property_readonly("num_qubits", &CtmpModel::num_qubits)
      .def_property_readonly("gamma", &CtmpModel::gamma)
      .def("restricted", &CtmpModel::restricted, py::arg("num_qubits"))
      .def("scaled", &CtmpModel::scaled, py::arg("factor"))
      .def("__len__", [](const CtmpModel &model) { return model.terms().size(); });

  m.def("set_max_threads", &set_max_threads, py::arg("count"));
  m.def("max_threads", &max_threads);

  m.def("calibration_labels", [](int n) { return label_strings(calibration_state_labels(n), n); },
        py::arg("num_qubits"));
  m.def("minimal_calibration_labels", [](int n) { return label_strings(minimal_calibration_labels(n), n); },
        py::arg("num_qubits"));

  m.def(
      "apply_readout_noise",
      [](const CtmpModel &model, const std::map<std::string, std::uint64_t> &counts, std::uint64_t seed) {
        RandomStream rng(seed);
        return counts_to_dict(apply_readout_noise(counts_from_dict(counts, model.num_qubits()), model, rng));
      },
      py::arg("model"), py::arg("counts"), py::arg("seed"));

  m.def(
      "simulate_calibration",
      [](const CtmpModel &model, std::optional<std::vector<std::string>> labels, std::uint64_t shots,
         std::uint64_t seed) {
        const int n = model.num_qubits();
        std::vector<Bits> bits;
        if (labels) {
          for (const auto &l : *labels) bits.push_back(bits_from_string(l, n));
        } else {
          bits = calibration_state_labels(n);
        }
        RandomStream rng(seed);
        return calibration_to_json(simulate_calibration(model, bits, shots, rng)).dump();
      },
      py::arg("model"), py::arg("labels"), py::arg("shots"), py::arg("seed"));

  m.def(
      "fit_ctmp",
      [](const std::string &calibration, bool subtract_cross_pair) {
        FitOptions options;
        options.subtract_cross_pair = subtract_cross_pair;
        FitReport report;
        CtmpModel model = fit_ctmp(calibration_from_json(Json::parse(calibration)), options, &report);
        py::list pairs;
        for (const auto &p : report.pairs) {
          py::dict d;
          d["i"] = p.i;
          d["j"] = p.j;
          d["min_eigenvalue_modulus"] = p.min_eigenvalue_modulus;
          d["eigenvector_condition"] = p.eigenvector_condition;
          d["clipped_mass"] = p.clipped_mass;
          pairs.append(d);
        }
        return py::make_tuple(model, pairs);
      },
      py::arg("calibration"), py::arg("subtract_cross_pair") = true);

  m.def(
      "mitigate_expectation",
      [](const CtmpModel &model, const std::map<std::string, std::uint64_t> &counts,
         const std::vector<std::pair<std::string, double>> &terms, std::uint64_t num_samples, std::uint64_t seed) {
        const int n = model.num_qubits();
        std::vector<DiagonalTerm> diag;
        for (const auto &[label, weight] : terms) {
          PauliTerm t = parse_pauli_label(label);
          if (t.num_qubits != n || t.x_mask != 0) {
            throw ArgumentError("term '" + label + "' is not a " + std::to_string(n) + "-qubit Z/I string");
          }
          diag.push_back({t.z_mask, weight});
        }
        CountsMap c = counts_from_dict(counts, n);
        if (num_samples == 0) num_samples = default_mitigation_samples(model.gamma(), c.total());
        RandomStream rng(seed);
        Estimate e = mitigate_expectation(c, model, diag, num_samples, rng);
        return py::make_tuple(e.value, e.std_error);
      },
      py::arg("model"), py::arg("counts"), py::arg("terms"), py::arg("num_samples") = 0, py::arg("seed") = 0);

  m.def(
      "hubbard_terms",
      [](int sites, double t, double U, bool periodic, const std::string &mapping, const std::string &ordering) {
        std::vector<std::pair<std::string, double>> out;
        for (const auto &term : hubbard(sites, t, U, periodic, mapping, ordering).terms()) {
          out.emplace_back(pauli_label(term), term.coefficient.real());
        }
        return out;
      },
      py::arg("sites"), py::arg("t") = 1.0, py::arg("U") = 2.0, py::arg("periodic") = true,
      py::arg("mapping") = "bravyi_kitaev", py::arg("spin_ordering") = "blocked");

  m.def(
      "exact_ground_energy",
      [](int sites, double t, double U, bool periodic, const std::string &mapping, const std::string &ordering) {
        return exact_ground_energy(hubbard(sites, t, U, periodic, mapping, ordering));
      },
      py::arg("sites"), py::arg("t") = 1.0, py::arg("U") = 2.0, py::arg("periodic") = true,
      py::arg("mapping") = "bravyi_kitaev", py::arg("spin_ordering") = "blocked");

  m.def(
      "run_sweep",
      [](const std::string &config, const std::filesystem::path &base_dir) {
        SweepFileConfig c = parse_sweep_config(Json::parse(config), base_dir);
        SweepResult result;
        MinimumResult minimum;
        {
          py::gil_scoped_release release;
          result = run_sweep(c, &minimum);
        }
        return py::make_tuple(sweep_to_csv(result), minimum.value);
      },
      py::arg("config"), py::arg("base_dir"));

  m.def(
      "run_sampling",
      [](const std::string &config, const std::filesystem::path &base_dir) {
        SampleFileConfig c = parse_sample_config(Json::parse(config), base_dir);
        SamplingResult result;
        {
          py::gil_scoped_release release;
          result = random_sampling_experiment(c.sampling);
        }
        return py::make_tuple(sampling_rows_to_csv(result), sampling_summary_to_csv(result));
      },
      py::arg("config"), py::arg("base_dir"));

  m.def(
      "characterize",
      [](const CtmpModel &model, const std::string &graph) {
        GroupedRates rates = group_rates(model, graph_from_json(Json::parse(graph)));
        return py::make_tuple(rate_records_to_csv(rates), distance_summary_to_csv(rates));
      },
      py::arg("model"), py::arg("graph"));
}
