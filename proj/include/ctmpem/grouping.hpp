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

#ifndef CTMPEM_GROUPING_HPP
#define CTMPEM_GROUPING_HPP

#include <span>
#include <vector>

#include "ctmpem/counts.hpp"
#include "ctmpem/pauli.hpp"
#include "ctmpem/statevector.hpp"

namespace ctmpem {

/// A Z-type Pauli string measured in the computational basis.
struct DiagonalTerm {
  Bits z_mask = 0;
  double weight = 0.0;
};

/// sum_t weight_t * (-1)^{|x & z_t|}
double diagonal_value(Bits outcome, std::span<const DiagonalTerm> terms);

/// Qubit-wise commuting terms measured together after one basis change.
struct MeasurementGroup {
  Circuit basis_change;
  std::vector<DiagonalTerm> terms;
  /// The original (x_mask, z_mask) of each entry in `terms`, same order.
  std::vector<PauliTerm> source_terms;
};

struct GroupedObservable {
  int num_qubits = 0;
  /// Identity coefficient, added without measurement.
  double offset = 0.0;
  std::vector<MeasurementGroup> groups;
};

/// Greedy first-fit qubit-wise commuting partition, terms visited in
/// canonical order. Throws ValidityError for non-Hermitian input.
GroupedObservable group_observable(const Observable &observable);

/// Weighted mean parity over the counts. Throws ArgumentError on empty counts.
double expectation_from_counts(const CountsMap &counts, std::span<const DiagonalTerm> terms);

/// Standard error of expectation_from_counts treating shots as i.i.d.
double expectation_std_error(const CountsMap &counts, std::span<const DiagonalTerm> terms);

}  // namespace ctmpem

#endif  // CTMPEM_GROUPING_HPP
