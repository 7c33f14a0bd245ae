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

#ifndef CTMPEM_PAULI_HPP
#define CTMPEM_PAULI_HPP

#include <complex>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ctmpem/bits.hpp"

namespace ctmpem {

using Complex = std::complex<double>;

/// coefficient * P_{n-1} ... P_0 in symplectic form: qubit q carries
/// I (x=0,z=0), X (1,0), Z (0,1) or Y (1,1).
struct PauliTerm {
  int num_qubits = 1;
  Bits x_mask = 0;
  Bits z_mask = 0;
  Complex coefficient{1.0, 0.0};

  bool is_identity() const { return x_mask == 0 && z_mask == 0; }
  /// Number of Y factors.
  int y_count() const { return std::popcount(x_mask & z_mask); }
};

/// Product a*b with the exact Pauli phase. Throws ShapeError on width mismatch.
PauliTerm pauli_multiply(const PauliTerm &a, const PauliTerm &b);

/// Phase i^k as a complex number (k taken mod 4).
Complex i_pow(int k);

/// Parses a label over {I,X,Y,Z} with qubit 0 rightmost.
PauliTerm parse_pauli_label(std::string_view label, Complex coefficient = 1.0);
std::string pauli_label(const PauliTerm &term);

/// A sum of Pauli terms, one per (x_mask, z_mask), with negligible
/// coefficients dropped.
class Observable {
 public:
  static constexpr double kDropTolerance = 1e-12;

  explicit Observable(int num_qubits);
  Observable(int num_qubits, const std::vector<PauliTerm> &terms);

  static Observable identity(int num_qubits, Complex coefficient = 1.0);

  int num_qubits() const { return num_qubits_; }

  /// Terms in canonical (x_mask, z_mask) order.
  std::vector<PauliTerm> terms() const;
  std::size_t size() const { return terms_.size(); }

  void add_term(const PauliTerm &term);

  /// Coefficient of the identity term (0 if absent).
  Complex identity_coefficient() const;

  /// Max |Im(coefficient)| over all terms.
  double max_imaginary() const;
  bool is_hermitian(double tolerance = 1e-10) const { return max_imaginary() <= tolerance; }

  Observable &operator+=(const Observable &other);
  Observable &operator*=(Complex scalar);
  friend Observable operator+(Observable a, const Observable &b) { return a += b; }
  friend Observable operator*(Observable a, Complex s) { return a *= s; }
  friend Observable operator*(Complex s, Observable a) { return a *= s; }
  /// Operator product, expanded term by term.
  friend Observable operator*(const Observable &a, const Observable &b);

  /// Hermitian conjugate.
  Observable adjoint() const;

  /// Drops imaginary parts; throws ValidityError if any exceeds `tolerance`.
  Observable real_part(double tolerance = 1e-10) const;

 private:
  void prune(std::pair<Bits, Bits> key);

  int num_qubits_;
  std::map<std::pair<Bits, Bits>, Complex> terms_;
};

}  // namespace ctmpem

#endif  // CTMPEM_PAULI_HPP
