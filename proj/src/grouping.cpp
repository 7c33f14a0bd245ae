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

#include "ctmpem/grouping.hpp"

#include <cmath>

#include "ctmpem/error.hpp"

namespace ctmpem {

double diagonal_value(Bits outcome, std::span<const DiagonalTerm> terms) {
  double v = 0.0;
  for (const DiagonalTerm &t : terms) {
    v += t.weight * parity_sign(outcome, t.z_mask);
  }
  return v;
}

GroupedObservable group_observable(const Observable &observable) {
  if (!observable.is_hermitian()) {
    throw ValidityError("cannot group a non-Hermitian observable");
  }
  struct Basis {
    Bits x = 0;
    Bits z = 0;
    Bits support = 0;
  };
  const int n = observable.num_qubits();
  GroupedObservable out;
  out.num_qubits = n;
  out.offset = observable.identity_coefficient().real();

  std::vector<Basis> bases;
  std::vector<std::vector<PauliTerm>> members;
  for (const PauliTerm &term : observable.terms()) {
    if (term.is_identity()) {
      continue;
    }
    const Bits support = term.x_mask | term.z_mask;
    std::size_t slot = bases.size();
    for (std::size_t g = 0; g < bases.size(); ++g) {
      Bits overlap = support & bases[g].support;
      if (((term.x_mask ^ bases[g].x) & overlap) == 0 && ((term.z_mask ^ bases[g].z) & overlap) == 0) {
        slot = g;
        break;
      }
    }
    if (slot == bases.size()) {
      bases.push_back({});
      members.emplace_back();
    }
    bases[slot].x |= term.x_mask;
    bases[slot].z |= term.z_mask;
    bases[slot].support |= support;
    members[slot].push_back(term);
  }

  for (std::size_t g = 0; g < bases.size(); ++g) {
    MeasurementGroup group{Circuit(n), {}, members[g]};
    for (int q = 0; q < n; ++q) {
      if (!test_bit(bases[g].x, q)) {
        continue;
      }
      if (test_bit(bases[g].z, q)) {
        group.basis_change.add(Gate::sdg(q));
      }
      group.basis_change.add(Gate::h(q));
    }
    for (const PauliTerm &t : members[g]) {
      group.terms.push_back({t.x_mask | t.z_mask, t.coefficient.real()});
    }
    out.groups.push_back(std::move(group));
  }
  return out;
}

double expectation_from_counts(const CountsMap &counts, std::span<const DiagonalTerm> terms) {
  if (counts.empty()) {
    throw ArgumentError("cannot estimate an expectation from empty counts");
  }
  double sum = 0.0;
  for (const auto &[outcome, c] : counts.entries()) {
    sum += static_cast<double>(c) * diagonal_value(outcome, terms);
  }
  return sum / static_cast<double>(counts.total());
}

double expectation_std_error(const CountsMap &counts, std::span<const DiagonalTerm> terms) {
  if (counts.empty()) {
    throw ArgumentError("cannot estimate an expectation from empty counts");
  }
  const double n = static_cast<double>(counts.total());
  const double mean = expectation_from_counts(counts, terms);
  double var = 0.0;
  for (const auto &[outcome, c] : counts.entries()) {
    double d = diagonal_value(outcome, terms) - mean;
    var += static_cast<double>(c) * d * d;
  }
  return std::sqrt(var / n / n);
}

}  // namespace ctmpem
