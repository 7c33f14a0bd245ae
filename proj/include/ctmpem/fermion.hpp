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

#ifndef CTMPEM_FERMION_HPP
#define CTMPEM_FERMION_HPP

#include <string_view>
#include <vector>

#include "ctmpem/pauli.hpp"

namespace ctmpem {

enum class FermionMapping { jordan_wigner, bravyi_kitaev };
enum class LadderKind { raise, lower };

std::string_view to_string(FermionMapping mapping);
/// Throws ArgumentError for unknown names.
FermionMapping fermion_mapping_from_string(std::string_view name);

/// Fenwick-tree index sets behind the Bravyi-Kitaev encoding, valid for any
/// number of modes (not only powers of two).
class FenwickTree {
 public:
  explicit FenwickTree(int num_modes);

  int num_modes() const { return static_cast<int>(parent_.size()); }

  /// Ancestors of `mode`: qubits whose stored parity includes this mode.
  std::vector<int> update_set(int mode) const;
  /// Direct children of `mode`.
  std::vector<int> children(int mode) const;
  /// Children of ancestors with a smaller index than `mode`.
  std::vector<int> remainder_set(int mode) const;
  /// Qubits whose joint parity equals the occupation parity of modes < `mode`.
  std::vector<int> parity_set(int mode) const;

 private:
  void build(int left, int right, int parent);

  std::vector<int> parent_;
  std::vector<std::vector<int>> children_;
};

/// Qubit expansion of a creation (raise) or annihilation (lower) operator.
/// Throws ArgumentError when `mode` is out of range.
Observable map_fermion_op(int mode, int num_modes, LadderKind kind, FermionMapping mapping);

}  // namespace ctmpem

#endif  // CTMPEM_FERMION_HPP
