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

#include "ctmpem/pauli.hpp"

#include <cmath>
#include <string>

#include "ctmpem/error.hpp"

namespace ctmpem {

Complex i_pow(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0:
      return {1.0, 0.0};
    case 1:
      return {0.0, 1.0};
    case 2:
      return {-1.0, 0.0};
    default:
      return {0.0, -1.0};
  }
}

PauliTerm pauli_multiply(const PauliTerm &a, const PauliTerm &b) {
  if (a.num_qubits != b.num_qubits) {
    throw ShapeError("Pauli widths differ: " + std::to_string(a.num_qubits) + " vs " +
                     std::to_string(b.num_qubits));
  }
  // Each factor is i^{#Y} X^x Z^z. Moving Z^{z_a} past X^{x_b} costs
  // (-1)^{|z_a & x_b|}; the product is then renormalized to i^{#Y'} X^x Z^z.
  PauliTerm out;
  out.num_qubits = a.num_qubits;
  out.x_mask = a.x_mask ^ b.x_mask;
  out.z_mask = a.z_mask ^ b.z_mask;
  int k = a.y_count() + b.y_count() + 2 * std::popcount(a.z_mask & b.x_mask) - out.y_count();
  out.coefficient = a.coefficient * b.coefficient * i_pow(k);
  return out;
}

PauliTerm parse_pauli_label(std::string_view label, Complex coefficient) {
  const int n = static_cast<int>(label.size());
  if (n < 1 || n > kMaxBitsWidth) {
    throw ArgumentError("Pauli label length out of range");
  }
  PauliTerm term;
  term.num_qubits = n;
  term.coefficient = coefficient;
  for (int q = 0; q < n; ++q) {
    switch (label[static_cast<std::size_t>(n - 1 - q)]) {
      case 'I':
        break;
      case 'X':
        term.x_mask |= bit(q);
        break;
      case 'Y':
        term.x_mask |= bit(q);
        term.z_mask |= bit(q);
        break;
      case 'Z':
        term.z_mask |= bit(q);
        break;
      default:
        throw ArgumentError("invalid Pauli label '" + std::string(label) + "'");
    }
  }
  return term;
}

std::string pauli_label(const PauliTerm &term) {
  std::string out(static_cast<std::size_t>(term.num_qubits), 'I');
  for (int q = 0; q < term.num_qubits; ++q) {
    bool x = test_bit(term.x_mask, q);
    bool z = test_bit(term.z_mask, q);
    out[static_cast<std::size_t>(term.num_qubits - 1 - q)] = x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
  }
  return out;
}

Observable::Observable(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxBitsWidth) {
    throw SizeError("observable width " + std::to_string(num_qubits) + " out of range");
  }
}

Observable::Observable(int num_qubits, const std::vector<PauliTerm> &terms) : Observable(num_qubits) {
  for (const auto &t : terms) {
    add_term(t);
  }
}

Observable Observable::identity(int num_qubits, Complex coefficient) {
  Observable o(num_qubits);
  PauliTerm t;
  t.num_qubits = num_qubits;
  t.coefficient = coefficient;
  o.add_term(t);
  return o;
}

std::vector<PauliTerm> Observable::terms() const {
  std::vector<PauliTerm> out;
  out.reserve(terms_.size());
  for (const auto &[key, c] : terms_) {
    out.push_back(PauliTerm{num_qubits_, key.first, key.second, c});
  }
  return out;
}

void Observable::prune(std::pair<Bits, Bits> key) {
  auto it = terms_.find(key);
  if (it != terms_.end() && std::abs(it->second) < kDropTolerance) {
    terms_.erase(it);
  }
}

void Observable::add_term(const PauliTerm &term) {
  if (term.num_qubits != num_qubits_) {
    throw ShapeError("term width " + std::to_string(term.num_qubits) + " does not match observable width " +
                     std::to_string(num_qubits_));
  }
  const Bits allowed = low_mask(num_qubits_);
  if ((term.x_mask & ~allowed) != 0 || (term.z_mask & ~allowed) != 0) {
    throw ArgumentError("Pauli masks exceed the register width");
  }
  auto key = std::make_pair(term.x_mask, term.z_mask);
  terms_[key] += term.coefficient;
  prune(key);
}

Complex Observable::identity_coefficient() const {
  auto it = terms_.find({0, 0});
  return it == terms_.end() ? Complex{0.0, 0.0} : it->second;
}

double Observable::max_imaginary() const {
  double m = 0.0;
  for (const auto &[key, c] : terms_) {
    m = std::max(m, std::abs(c.imag()));
  }
  return m;
}

Observable &Observable::operator+=(const Observable &other) {
  if (other.num_qubits_ != num_qubits_) {
    throw ShapeError("observable widths differ");
  }
  for (const auto &[key, c] : other.terms_) {
    terms_[key] += c;
    prune(key);
  }
  return *this;
}

Observable &Observable::operator*=(Complex scalar) {
  for (auto &[key, c] : terms_) {
    c *= scalar;
  }
  std::erase_if(terms_, [](const auto &kv) { return std::abs(kv.second) < kDropTolerance; });
  return *this;
}

Observable operator*(const Observable &a, const Observable &b) {
  if (a.num_qubits_ != b.num_qubits_) {
    throw ShapeError("observable widths differ");
  }
  Observable out(a.num_qubits_);
  for (const PauliTerm &ta : a.terms()) {
    for (const PauliTerm &tb : b.terms()) {
      PauliTerm p = pauli_multiply(ta, tb);
      out.terms_[{p.x_mask, p.z_mask}] += p.coefficient;
    }
  }
  std::erase_if(out.terms_, [](const auto &kv) { return std::abs(kv.second) < Observable::kDropTolerance; });
  return out;
}

Observable Observable::adjoint() const {
  // Pauli strings are Hermitian, so only coefficients conjugate.
  Observable out(num_qubits_);
  for (const auto &[key, c] : terms_) {
    out.terms_[key] = std::conj(c);
  }
  return out;
}

Observable Observable::real_part(double tolerance) const {
  if (max_imaginary() > tolerance) {
    throw ValidityError("observable has imaginary coefficients up to " + std::to_string(max_imaginary()));
  }
  Observable out(num_qubits_);
  for (const auto &[key, c] : terms_) {
    if (std::abs(c.real()) >= kDropTolerance) {
      out.terms_[key] = Complex{c.real(), 0.0};
    }
  }
  return out;
}

}  // namespace ctmpem
