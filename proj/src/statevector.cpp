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

#include "ctmpem/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ctmpem/error.hpp"
#include "ctmpem/parallel.hpp"
#include "ctmpem/pauli.hpp"

namespace ctmpem {

namespace {

constexpr std::uint64_t kShotBlock = 1 << 16;

void check_qubit(int q, int n) {
  if (q < 0 || q >= n) {
    throw ArgumentError("qubit " + std::to_string(q) + " out of range for " + std::to_string(n) + " qubits");
  }
}

// Calls body(i0, i1) for every index pair differing only in bit q.
template <typename F>
void for_each_pair(std::size_t dim, int q, F &&body) {
  const std::size_t step = std::size_t{1} << q;
  for (std::size_t base = 0; base < dim; base += 2 * step) {
    for (std::size_t i = base; i < base + step; ++i) {
      body(i, i + step);
    }
  }
}

}  // namespace

Circuit::Circuit(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxBitsWidth) {
    throw SizeError("circuit width " + std::to_string(num_qubits) + " out of range");
  }
}

Circuit &Circuit::add(const Gate &gate) {
  check_qubit(gate.qubits[0], num_qubits_);
  if (gate.arity() == 2) {
    check_qubit(gate.qubits[1], num_qubits_);
    if (gate.qubits[0] == gate.qubits[1]) {
      throw ArgumentError("CZ targets must be distinct");
    }
  }
  gates_.push_back(gate);
  return *this;
}

Circuit &Circuit::append(const Circuit &other) {
  if (other.num_qubits_ != num_qubits_) {
    throw ShapeError("cannot append a " + std::to_string(other.num_qubits_) + "-qubit circuit to a " +
                     std::to_string(num_qubits_) + "-qubit circuit");
  }
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
  return *this;
}

Statevector::Statevector(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxStatevectorQubits) {
    throw SizeError("statevector size " + std::to_string(num_qubits) + " outside [1, " +
                    std::to_string(kMaxStatevectorQubits) + "]");
  }
  amplitudes_.assign(std::size_t{1} << num_qubits, Complex{0.0, 0.0});
  amplitudes_[0] = 1.0;
}

void Statevector::apply(const Gate &gate) {
  const int q = gate.qubits[0];
  check_qubit(q, num_qubits_);
  auto &a = amplitudes_;
  const std::size_t dim = a.size();
  switch (gate.kind) {
    case GateKind::H: {
      const double r = std::numbers::sqrt2 / 2.0;
      for_each_pair(dim, q, [&](std::size_t i0, std::size_t i1) {
        Complex u = a[i0];
        Complex v = a[i1];
        a[i0] = r * (u + v);
        a[i1] = r * (u - v);
      });
      break;
    }
    case GateKind::X:
      for_each_pair(dim, q, [&](std::size_t i0, std::size_t i1) { std::swap(a[i0], a[i1]); });
      break;
    case GateKind::RY: {
      const double c = std::cos(gate.angle / 2.0);
      const double s = std::sin(gate.angle / 2.0);
      for_each_pair(dim, q, [&](std::size_t i0, std::size_t i1) {
        Complex u = a[i0];
        Complex v = a[i1];
        a[i0] = c * u - s * v;
        a[i1] = s * u + c * v;
      });
      break;
    }
    case GateKind::Sdg:
      for_each_pair(dim, q, [&](std::size_t, std::size_t i1) { a[i1] *= Complex{0.0, -1.0}; });
      break;
    case GateKind::CZ: {
      const int p = gate.qubits[1];
      check_qubit(p, num_qubits_);
      if (p == q) {
        throw ArgumentError("CZ targets must be distinct");
      }
      const std::size_t both = (std::size_t{1} << q) | (std::size_t{1} << p);
      for (std::size_t i = 0; i < dim; ++i) {
        if ((i & both) == both) {
          a[i] = -a[i];
        }
      }
      break;
    }
  }
}

void Statevector::apply(const Circuit &circuit) {
  if (circuit.num_qubits() != num_qubits_) {
    throw ShapeError("circuit has " + std::to_string(circuit.num_qubits()) + " qubits, state has " +
                     std::to_string(num_qubits_));
  }
  for (const Gate &g : circuit.gates()) {
    apply(g);
  }
}

double Statevector::norm_squared() const {
  double total = 0.0;
  for (const Complex &z : amplitudes_) {
    total += std::norm(z);
  }
  return total;
}

void Statevector::set_amplitudes(std::span<const Complex> values) {
  if (values.size() != amplitudes_.size()) {
    throw ShapeError("expected " + std::to_string(amplitudes_.size()) + " amplitudes, got " +
                     std::to_string(values.size()));
  }
  std::copy(values.begin(), values.end(), amplitudes_.begin());
}

Statevector new_zero_state(int num_qubits) { return Statevector(num_qubits); }

Statevector apply_circuit(Statevector state, const Circuit &circuit) {
  state.apply(circuit);
  return state;
}

std::vector<double> exact_probabilities(const Statevector &state) {
  std::vector<double> p;
  p.reserve(state.dimension());
  for (const Complex &z : state.amplitudes()) {
    p.push_back(std::norm(z));
  }
  return p;
}

CountsMap sample_counts(std::span<const double> probabilities, int num_qubits, std::uint64_t shots,
                        RandomStream &rng) {
  if (shots == 0) {
    throw ArgumentError("shots must be at least 1");
  }
  if (probabilities.size() != (std::size_t{1} << num_qubits)) {
    throw ShapeError("probability vector length does not match 2^n");
  }
  std::vector<double> cdf(probabilities.size());
  double running = 0.0;
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    running += probabilities[i];
    cdf[i] = running;
  }
  const double total = running;

  const std::uint64_t base_seed = rng.next_u64();
  const std::size_t blocks = static_cast<std::size_t>((shots + kShotBlock - 1) / kShotBlock);
  std::vector<std::vector<Bits>> outcomes(blocks);
  parallel_for(blocks, [&](std::size_t b) {
    RandomStream stream(derive_seed(base_seed, b));
    std::uint64_t first = b * kShotBlock;
    std::uint64_t n = std::min(kShotBlock, shots - first);
    auto &out = outcomes[b];
    out.reserve(n);
    for (std::uint64_t s = 0; s < n; ++s) {
      double u = stream.uniform() * total;
      auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
      std::size_t idx = it == cdf.end() ? cdf.size() - 1 : static_cast<std::size_t>(it - cdf.begin());
      // Never land on a zero-probability outcome through rounding at the tail.
      while (idx > 0 && probabilities[idx] == 0.0) {
        --idx;
      }
      out.push_back(static_cast<Bits>(idx));
    }
    std::sort(out.begin(), out.end());
  });

  CountsMap counts(num_qubits);
  for (const auto &block : outcomes) {
    for (std::size_t i = 0; i < block.size();) {
      std::size_t j = i;
      while (j < block.size() && block[j] == block[i]) {
        ++j;
      }
      counts.add(block[i], j - i);
      i = j;
    }
  }
  return counts;
}

CountsMap sample_counts(const Statevector &state, std::uint64_t shots, RandomStream &rng) {
  auto p = exact_probabilities(state);
  return sample_counts(p, state.num_qubits(), shots, rng);
}

double exact_expectation(const Statevector &state, const Observable &observable) {
  if (observable.num_qubits() != state.num_qubits()) {
    throw ShapeError("observable and state widths differ");
  }
  if (!observable.is_hermitian()) {
    throw ValidityError("observable is not Hermitian");
  }
  auto psi = state.amplitudes();
  Complex total{0.0, 0.0};
  for (const PauliTerm &term : observable.terms()) {
    // States are normalized, so the identity contributes its coefficient.
    if (term.is_identity()) {
      total += term.coefficient;
      continue;
    }
    const Complex phase = term.coefficient * i_pow(term.y_count());
    Complex acc{0.0, 0.0};
    for (std::size_t b = 0; b < psi.size(); ++b) {
      double sign = parity_sign(b, term.z_mask);
      acc += std::conj(psi[b ^ term.x_mask]) * sign * psi[b];
    }
    total += phase * acc;
  }
  return total.real();
}

}  // namespace ctmpem
