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

#ifndef CTMPEM_CHARACTERIZATION_HPP
#define CTMPEM_CHARACTERIZATION_HPP

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ctmpem/ctmp_model.hpp"

namespace ctmpem {

/// Undirected device connectivity.
class CouplingGraph {
 public:
  /// Throws ArgumentError for out-of-range indices, self loops or duplicate
  /// edges (in either orientation).
  CouplingGraph(int num_qubits, std::vector<std::pair<int, int>> edges);

  int num_qubits() const { return num_qubits_; }
  const std::vector<std::pair<int, int>> &edges() const { return edges_; }
  const std::vector<int> &neighbors(int q) const { return adjacency_[q]; }

  /// BFS hop counts from `source`; nullopt for unreachable qubits.
  std::vector<std::optional<int>> distances_from(int source) const;

 private:
  int num_qubits_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adjacency_;
};

/// Shortest-path edge count, nullopt if disconnected. Throws ArgumentError
/// for i == j or out-of-range qubits.
std::optional<int> qubit_distance(const CouplingGraph &graph, int i, int j);

/// Reporting kinds: both exchange directions collapse to `exchange`.
enum class RateKind { excitation, decay, exchange, single_excite, single_decay };

std::string_view to_string(RateKind kind);
RateKind reporting_kind(GeneratorKind kind);

struct RateRecord {
  RateKind kind = RateKind::decay;
  GeneratorKind generator = GeneratorKind::pair_decay;
  int qubit_i = 0;
  int qubit_j = -1;
  /// Empty for single-qubit records and for unreachable pairs.
  std::optional<int> distance;
  double rate = 0.0;
};

struct GroupedRates {
  /// Pair records sorted by (kind, distance, qubits); unreachable pairs last
  /// within a kind.
  std::vector<RateRecord> pair_records;
  /// Single-qubit records sorted by (kind, qubit).
  std::vector<RateRecord> single_records;
};

/// Throws ShapeError when model and graph widths differ.
GroupedRates group_rates(const CtmpModel &model, const CouplingGraph &graph);

struct QuartileSummary {
  std::optional<double> q1;
  std::optional<double> median;
  std::optional<double> q3;
  int count = 0;
  int zeros = 0;
};

/// Linear-interpolation (inclusive) quantile over sorted data, q in [0, 1].
double quantile_sorted(std::span<const double> sorted, double q);

/// Quartiles over the nonzero rates; zeros only counted.
QuartileSummary summarize_quartiles(std::span<const double> rates);

/// Key (kind, distance) -> summary; distance -1 marks unreachable pairs.
using DistanceKey = std::pair<RateKind, int>;
std::map<DistanceKey, QuartileSummary> summarize_by_distance(std::span<const RateRecord> records);

enum class Locality { one_qubit, two_qubit };
std::string_view to_string(Locality locality);

struct ModelComparison {
  std::string name;
  /// Nonzero rates split by locality.
  std::vector<double> one_qubit_rates;
  std::vector<double> two_qubit_rates;
  QuartileSummary one_qubit;
  QuartileSummary two_qubit;
};

/// Throws ArgumentError for an empty list.
std::vector<ModelComparison> compare_models(std::span<const std::pair<std::string, CtmpModel>> models);

}  // namespace ctmpem

#endif  // CTMPEM_CHARACTERIZATION_HPP
