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

#ifndef CTMPEM_STATEVECTOR_HPP
#define CTMPEM_STATEVECTOR_HPP

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "ctmpem/counts.hpp"
#include "ctmpem/random.hpp"

namespace ctmpem {

using Complex = std::complex<double>;

class Observable;

inline constexpr int kMaxStatevectorQubits = 24;

enum class GateKind { H, X, RY, CZ, Sdg };

struct Gate {
  GateKind kind;
  std::array<int, 2> qubits{0, 0};
  double angle = 0.0;

  static Gate h(int q) { return {GateKind::H, {q, q}, 0.0}; }
  static Gate x(int q) { return {GateKind::X, {q, q}, 0.0}; }
  static Gate ry(int q, double angle) { return {GateKind::RY, {q, q}, angle}; }
  static Gate cz(int a, int b) { return {GateKind::CZ, {a, b}, 0.0}; }
  static Gate sdg(int q) { return {GateKind::Sdg, {q, q}, 0.0}; }

  int arity() const { return kind == GateKind::CZ ? 2 : 1; }

  bool operator==(const Gate &) const = default;
};

/// Ordered gate list on a fixed register. Gates are validated on insertion.
class Circuit {
 public:
  explicit Circuit(int num_qubits);

  int num_qubits() const { return num_qubits_; }
  const std::vector<Gate> &gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }

  /// Throws ArgumentError for out-of-range or coincident CZ qubits.
  Circuit &add(const Gate &gate);
  /// Throws ShapeError on a width mismatch.
  Circuit &append(const Circuit &other);

 private:
  int num_qubits_;
  std::vector<Gate> gates_;
};

/// Dense state of up to 24 qubits; amplitude index has qubit 0 as its least
/// significant bit.
class Statevector {
 public:
  /// |0...0>. Throws SizeError unless 1 <= num_qubits <= 24.
  explicit Statevector(int num_qubits);

  int num_qubits() const { return num_qubits_; }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  std::size_t dimension() const { return amplitudes_.size(); }

  void apply(const Gate &gate);
  /// Throws ShapeError if the circuit width differs.
  void apply(const Circuit &circuit);

  double norm_squared() const;

  /// Overwrites amplitudes (used by tests and bindings). Throws ShapeError on a
  /// length mismatch; the caller is responsible for normalization.
  void set_amplitudes(std::span<const Complex> values);

 private:
  int num_qubits_;
  std::vector<Complex> amplitudes_;
};

Statevector new_zero_state(int num_qubits);

Statevector apply_circuit(Statevector state, const Circuit &circuit);

std::vector<double> exact_probabilities(const Statevector &state);

/// Draws `shots` outcomes i.i.d. from the Born distribution by inverse-CDF
/// lookup, one uniform per shot. Throws ArgumentError for zero shots.
CountsMap sample_counts(const Statevector &state, std::uint64_t shots, RandomStream &rng);

/// Same as above with a precomputed probability vector.
CountsMap sample_counts(std::span<const double> probabilities, int num_qubits, std::uint64_t shots,
                        RandomStream &rng);

/// <psi|O|psi> by direct Pauli action. Throws ValidityError if O is not
/// Hermitian.
double exact_expectation(const Statevector &state, const Observable &observable);

}  // namespace ctmpem

#endif  // CTMPEM_STATEVECTOR_HPP
