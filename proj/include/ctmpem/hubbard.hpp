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

#ifndef CTMPEM_HUBBARD_HPP
#define CTMPEM_HUBBARD_HPP

#include <string_view>
#include <utility>
#include <vector>

#include "ctmpem/fermion.hpp"
#include "ctmpem/pauli.hpp"

namespace ctmpem {

/// Assignment of spin orbitals to fermionic modes (and so to qubits).
enum class SpinOrdering {
  /// Mode k is site k spin up, mode L + k is site k spin down.
  blocked,
  /// Mode 2k is site k spin up, mode 2k + 1 is site k spin down.
  interleaved,
};

std::string_view to_string(SpinOrdering ordering);
/// Throws ArgumentError for unknown names.
SpinOrdering spin_ordering_from_string(std::string_view name);

/// Mode holding site `site` with spin `spin` (0 = up, 1 = down).
inline constexpr int spin_orbital(int site, int spin, int num_sites, SpinOrdering ordering = SpinOrdering::blocked) {
  return ordering == SpinOrdering::blocked ? spin * num_sites + site : 2 * site + spin;
}

/// Nearest-neighbour edges of a 1-D chain. The periodic wrap (L-1, 0) is only
/// added for L >= 3; for L = 2 it would repeat the single chain edge.
std::vector<std::pair<int, int>> hubbard_chain_edges(int num_sites, bool periodic);

/// Fermi-Hubbard Hamiltonian on a 1-D chain, 2*num_sites qubits, mapped to
/// Pauli operators. Throws ArgumentError for num_sites < 1.
Observable build_hubbard(int num_sites, double t, double U, bool periodic, FermionMapping mapping,
                         SpinOrdering ordering = SpinOrdering::blocked);

}  // namespace ctmpem

#endif  // CTMPEM_HUBBARD_HPP
