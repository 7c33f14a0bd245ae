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

#ifndef CTMPEM_IO_HPP
#define CTMPEM_IO_HPP

#include <filesystem>
#include <string>

#include <json.hpp>

#include "ctmpem/calibration.hpp"
#include "ctmpem/characterization.hpp"
#include "ctmpem/ctmp_model.hpp"
#include "ctmpem/pauli.hpp"
#include "ctmpem/vqe.hpp"

namespace ctmpem {

using Json = nlohmann::json;

// JSON conversions. Every `*_from_json` throws ValidityError with the
// offending field on malformed input.

/// [{"pauli_label": "IXZ", "coeff_re": 1.0, "coeff_im": 0.0}, ...], qubit 0
/// rightmost.
Json observable_to_json(const Observable &observable);
Observable observable_from_json(const Json &json);

/// {"num_qubits": n, "terms": [{"kind", "qubits", "rate"}, ...]}. Gamma is
/// never written; it is recomputed on load.
Json model_to_json(const CtmpModel &model);
CtmpModel model_from_json(const Json &json);

/// {"num_qubits", "shots", "results": [{"label", "counts"}], "bit_order"}.
/// Both "qubit0_rightmost" (written) and "qubit0_leftmost" are accepted.
Json calibration_to_json(const CalibrationSet &cal);
CalibrationSet calibration_from_json(const Json &json);

/// {"num_qubits": n, "edges": [[i, j], ...]}
Json graph_to_json(const CouplingGraph &graph);
CouplingGraph graph_from_json(const Json &json);

/// Throws IoError if the file cannot be read or parsed.
Json read_json_file(const std::filesystem::path &path);

/// Writes to a sibling temporary file and renames it over `path`, so `path`
/// either keeps its old contents or holds the complete new ones.
void write_file_atomic(const std::filesystem::path &path, const std::string &contents);
void write_json_file(const std::filesystem::path &path, const Json &json);

std::string sweep_to_csv(const SweepResult &result);
std::string sampling_rows_to_csv(const SamplingResult &result);
std::string sampling_summary_to_csv(const SamplingResult &result);
std::string rate_records_to_csv(const GroupedRates &rates);
std::string distance_summary_to_csv(const GroupedRates &rates);
std::string comparison_to_csv(const std::vector<ModelComparison> &comparisons);
std::string comparison_summary_to_csv(const std::vector<ModelComparison> &comparisons);

/// Shortest round-trip decimal form of a double.
std::string format_double(double value);

}  // namespace ctmpem

#endif  // CTMPEM_IO_HPP
