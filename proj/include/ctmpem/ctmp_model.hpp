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

#ifndef CTMPEM_CTMP_MODEL_HPP
#define CTMPEM_CTMP_MODEL_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "ctmpem/bits.hpp"

namespace ctmpem {

/// Readout transitions. For pair kinds the two-bit pattern is written as
/// (bit of qubits[0], bit of qubits[1]); qubits[0] < qubits[1].
enum class GeneratorKind {
  single_excite,   // 0 -> 1
  single_decay,    // 1 -> 0
  pair_excite,     // 00 -> 11
  pair_decay,      // 11 -> 00
  exchange_01_10,  // 01 -> 10
  exchange_10_01,  // 10 -> 01
};

std::string_view to_string(GeneratorKind kind);
/// Throws ArgumentError for unknown names.
GeneratorKind generator_kind_from_string(std::string_view name);

inline constexpr bool is_pair_kind(GeneratorKind kind) {
  return kind != GeneratorKind::single_excite && kind != GeneratorKind::single_decay;
}

struct GeneratorTerm {
  GeneratorKind kind = GeneratorKind::single_excite;
  std::array<int, 2> qubits{0, 0};
  double rate = 0.0;

  int arity() const { return is_pair_kind(kind) ? 2 : 1; }
  /// Qubits whose values must match `source_value`.
  Bits source_mask() const;
  /// Pattern on `source_mask` that enables this transition.
  Bits source_value() const;
  /// Bits flipped when the transition fires (equal to source_mask).
  Bits flip_mask() const { return source_mask(); }

  static GeneratorTerm single(GeneratorKind kind, int q, double rate) { return {kind, {q, q}, rate}; }
  /// Orders the qubits ascending; exchange kinds are swapped accordingly.
  static GeneratorTerm pair(GeneratorKind kind, int a, int b, double rate);
};

enum class GammaMode { automatic, exact, upper_bound };

/// A = exp(G), G = sum_i r_i (|b_i><a_i| - |a_i><a_i|).
///
/// gamma (max_x of the total outflow rate) is cached. Constructors compute it;
/// mutators mark it stale until refresh_gamma() runs, and gamma() refuses to
/// return a stale value.
class CtmpModel {
 public:
  static constexpr int kMaxExactGammaQubits = 16;

  explicit CtmpModel(int num_qubits);
  /// Validates every term and computes gamma (automatic mode).
  CtmpModel(int num_qubits, std::vector<GeneratorTerm> terms);

  int num_qubits() const { return num_qubits_; }
  const std::vector<GeneratorTerm> &terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  /// Throws ArgumentError for invalid qubits, a negative rate, or a duplicate
  /// (kind, qubits) key.
  void add_term(const GeneratorTerm &term);
  void set_rate(std::size_t index, double rate);

  bool gamma_current() const { return gamma_.has_value(); }
  /// Throws ConsistencyError when the model was mutated since the last refresh.
  double gamma() const;
  void refresh_gamma(GammaMode mode = GammaMode::automatic);

  /// Total outflow rate Gamma(x) = -<x|G|x>.
  double outflow(Bits x) const;

  /// Picks the transition enabled at `x` whose cumulative rate first exceeds
  /// `threshold`; returns x unchanged when threshold >= Gamma(x).
  Bits transition(Bits x, double threshold) const;

  /// Terms acting only on qubits < num_qubits; gamma refreshed.
  CtmpModel restricted(int num_qubits) const;

  /// Copy with every rate multiplied by `factor`; gamma refreshed.
  CtmpModel scaled(double factor) const;

  std::optional<double> find_rate(GeneratorKind kind, int a, int b = -1) const;

 private:
  void validate(const GeneratorTerm &term) const;
  void compile(const GeneratorTerm &term);

  int num_qubits_;
  std::vector<GeneratorTerm> terms_;
  // Flat transition table used by the samplers.
  std::vector<Bits> masks_;
  std::vector<Bits> values_;
  std::vector<double> rates_;
  std::optional<double> gamma_;
};

/// exact: max over all 2^n bitstrings (n <= 16, SizeError otherwise).
/// upper_bound: per-qubit max of the single rates plus per-pair max over the
/// four source patterns. automatic: exact when n <= 16.
double compute_gamma(const CtmpModel &model, GammaMode mode = GammaMode::automatic);

inline constexpr int kMaxDenseQubits = 10;

/// Dense G with (row = target, column = source); columns sum to zero.
/// Throws SizeError above 10 qubits.
Eigen::MatrixXd dense_generator(const CtmpModel &model);

}  // namespace ctmpem

#endif  // CTMPEM_CTMP_MODEL_HPP
