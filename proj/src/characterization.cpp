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

#include "ctmpem/characterization.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>
#include <string>
#include <tuple>

#include "ctmpem/error.hpp"

namespace ctmpem {

CouplingGraph::CouplingGraph(int num_qubits, std::vector<std::pair<int, int>> edges)
    : num_qubits_(num_qubits), edges_(std::move(edges)), adjacency_(static_cast<std::size_t>(std::max(num_qubits, 0))) {
  if (num_qubits < 1) {
    throw ArgumentError("coupling graph needs at least one qubit");
  }
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : edges_) {
    if (a < 0 || b < 0 || a >= num_qubits || b >= num_qubits) {
      throw ArgumentError("edge (" + std::to_string(a) + ", " + std::to_string(b) + ") out of range");
    }
    if (a == b) {
      throw ArgumentError("self loop on qubit " + std::to_string(a));
    }
    if (!seen.insert(std::minmax(a, b)).second) {
      throw ArgumentError("duplicate edge (" + std::to_string(a) + ", " + std::to_string(b) + ")");
    }
    adjacency_[static_cast<std::size_t>(a)].push_back(b);
    adjacency_[static_cast<std::size_t>(b)].push_back(a);
  }
}

std::vector<std::optional<int>> CouplingGraph::distances_from(int source) const {
  std::vector<std::optional<int>> dist(static_cast<std::size_t>(num_qubits_));
  dist[static_cast<std::size_t>(source)] = 0;
  std::deque<int> frontier{source};
  while (!frontier.empty()) {
    int u = frontier.front();
    frontier.pop_front();
    for (int v : adjacency_[static_cast<std::size_t>(u)]) {
      if (!dist[static_cast<std::size_t>(v)]) {
        dist[static_cast<std::size_t>(v)] = *dist[static_cast<std::size_t>(u)] + 1;
        frontier.push_back(v);
      }
    }
  }
  return dist;
}

std::optional<int> qubit_distance(const CouplingGraph &graph, int i, int j) {
  const int n = graph.num_qubits();
  if (i < 0 || j < 0 || i >= n || j >= n) {
    throw ArgumentError("qubit index out of range");
  }
  if (i == j) {
    throw ArgumentError("qubit distance needs two distinct qubits");
  }
  return graph.distances_from(i)[static_cast<std::size_t>(j)];
}

std::string_view to_string(RateKind kind) {
  switch (kind) {
    case RateKind::excitation:
      return "excitation";
    case RateKind::decay:
      return "decay";
    case RateKind::exchange:
      return "exchange";
    case RateKind::single_excite:
      return "single_excite";
    case RateKind::single_decay:
      return "single_decay";
  }
  return "unknown";
}

RateKind reporting_kind(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::single_excite:
      return RateKind::single_excite;
    case GeneratorKind::single_decay:
      return RateKind::single_decay;
    case GeneratorKind::pair_excite:
      return RateKind::excitation;
    case GeneratorKind::pair_decay:
      return RateKind::decay;
    case GeneratorKind::exchange_01_10:
    case GeneratorKind::exchange_10_01:
      return RateKind::exchange;
  }
  return RateKind::exchange;
}

GroupedRates group_rates(const CtmpModel &model, const CouplingGraph &graph) {
  if (model.num_qubits() != graph.num_qubits()) {
    throw ShapeError("model has " + std::to_string(model.num_qubits()) + " qubits, graph has " +
                     std::to_string(graph.num_qubits()));
  }
  std::vector<std::vector<std::optional<int>>> dist;
  for (int q = 0; q < graph.num_qubits(); ++q) {
    dist.push_back(graph.distances_from(q));
  }
  GroupedRates out;
  for (const auto &t : model.terms()) {
    RateRecord r;
    r.kind = reporting_kind(t.kind);
    r.generator = t.kind;
    r.qubit_i = t.qubits[0];
    r.rate = t.rate;
    if (t.arity() == 2) {
      r.qubit_j = t.qubits[1];
      r.distance = dist[static_cast<std::size_t>(t.qubits[0])][static_cast<std::size_t>(t.qubits[1])];
      out.pair_records.push_back(r);
    } else {
      out.single_records.push_back(r);
    }
  }
  auto dist_key = [](const RateRecord &r) { return r.distance.value_or(std::numeric_limits<int>::max()); };
  std::stable_sort(out.pair_records.begin(), out.pair_records.end(), [&](const RateRecord &a, const RateRecord &b) {
    return std::make_tuple(a.kind, dist_key(a), a.qubit_i, a.qubit_j, a.generator) <
           std::make_tuple(b.kind, dist_key(b), b.qubit_i, b.qubit_j, b.generator);
  });
  std::stable_sort(out.single_records.begin(), out.single_records.end(),
                   [](const RateRecord &a, const RateRecord &b) {
                     return std::make_tuple(a.kind, a.qubit_i) < std::make_tuple(b.kind, b.qubit_i);
                   });
  return out;
}

double quantile_sorted(std::span<const double> sorted, double q) {
  if (sorted.empty()) {
    throw ArgumentError("quantile of an empty sample");
  }
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

QuartileSummary summarize_quartiles(std::span<const double> rates) {
  QuartileSummary s;
  std::vector<double> nonzero;
  for (double r : rates) {
    if (r == 0.0) {
      ++s.zeros;
    } else {
      nonzero.push_back(r);
    }
  }
  s.count = static_cast<int>(rates.size());
  if (!nonzero.empty()) {
    std::sort(nonzero.begin(), nonzero.end());
    s.q1 = quantile_sorted(nonzero, 0.25);
    s.median = quantile_sorted(nonzero, 0.5);
    s.q3 = quantile_sorted(nonzero, 0.75);
  }
  return s;
}

std::map<DistanceKey, QuartileSummary> summarize_by_distance(std::span<const RateRecord> records) {
  std::map<DistanceKey, std::vector<double>> buckets;
  for (const auto &r : records) {
    buckets[{r.kind, r.distance.value_or(-1)}].push_back(r.rate);
  }
  std::map<DistanceKey, QuartileSummary> out;
  for (const auto &[key, rates] : buckets) {
    out[key] = summarize_quartiles(rates);
  }
  return out;
}

std::string_view to_string(Locality locality) {
  return locality == Locality::one_qubit ? "1-qubit" : "2-qubit";
}

std::vector<ModelComparison> compare_models(std::span<const std::pair<std::string, CtmpModel>> models) {
  if (models.empty()) {
    throw ArgumentError("compare_models needs at least one model");
  }
  std::vector<ModelComparison> out;
  for (const auto &[name, model] : models) {
    ModelComparison c;
    c.name = name;
    std::vector<double> one;
    std::vector<double> two;
    for (const auto &t : model.terms()) {
      (t.arity() == 1 ? one : two).push_back(t.rate);
    }
    c.one_qubit = summarize_quartiles(one);
    c.two_qubit = summarize_quartiles(two);
    std::copy_if(one.begin(), one.end(), std::back_inserter(c.one_qubit_rates), [](double r) { return r != 0.0; });
    std::copy_if(two.begin(), two.end(), std::back_inserter(c.two_qubit_rates), [](double r) { return r != 0.0; });
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace ctmpem
