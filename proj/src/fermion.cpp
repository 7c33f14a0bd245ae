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

#include "ctmpem/fermion.hpp"

#include <algorithm>
#include <string>

#include "ctmpem/error.hpp"

namespace ctmpem {

std::string_view to_string(FermionMapping mapping) {
  return mapping == FermionMapping::jordan_wigner ? "jordan_wigner" : "bravyi_kitaev";
}

FermionMapping fermion_mapping_from_string(std::string_view name) {
  if (name == "jordan_wigner") return FermionMapping::jordan_wigner;
  if (name == "bravyi_kitaev") return FermionMapping::bravyi_kitaev;
  throw ArgumentError("unknown fermion mapping '" + std::string(name) + "'");
}

FenwickTree::FenwickTree(int num_modes) {
  if (num_modes < 1 || num_modes > kMaxBitsWidth) {
    throw SizeError("number of modes " + std::to_string(num_modes) + " out of range");
  }
  parent_.assign(static_cast<std::size_t>(num_modes), -1);
  children_.assign(static_cast<std::size_t>(num_modes), {});
  build(0, num_modes - 1, num_modes - 1);
}

void FenwickTree::build(int left, int right, int parent) {
  // Nodes in [left, right) hang below `parent`: the midpoint becomes a child
  // that owns the left half, the right half stays with `parent`.
  if (left >= right) {
    return;
  }
  int pivot = (left + right) / 2;
  parent_[static_cast<std::size_t>(pivot)] = parent;
  children_[static_cast<std::size_t>(parent)].push_back(pivot);
  build(left, pivot, pivot);
  build(pivot + 1, right, parent);
}

std::vector<int> FenwickTree::update_set(int mode) const {
  std::vector<int> out;
  for (int p = parent_.at(static_cast<std::size_t>(mode)); p >= 0; p = parent_[static_cast<std::size_t>(p)]) {
    out.push_back(p);
  }
  return out;
}

std::vector<int> FenwickTree::children(int mode) const { return children_.at(static_cast<std::size_t>(mode)); }

std::vector<int> FenwickTree::remainder_set(int mode) const {
  std::vector<int> out;
  for (int a : update_set(mode)) {
    for (int c : children_[static_cast<std::size_t>(a)]) {
      if (c < mode) {
        out.push_back(c);
      }
    }
  }
  return out;
}

std::vector<int> FenwickTree::parity_set(int mode) const {
  std::vector<int> out = remainder_set(mode);
  auto own = children(mode);
  out.insert(out.end(), own.begin(), own.end());
  return out;
}

Observable map_fermion_op(int mode, int num_modes, LadderKind kind, FermionMapping mapping) {
  if (num_modes < 1 || num_modes > kMaxBitsWidth) {
    throw SizeError("number of modes " + std::to_string(num_modes) + " out of range");
  }
  if (mode < 0 || mode >= num_modes) {
    throw ArgumentError("mode " + std::to_string(mode) + " out of range for " + std::to_string(num_modes) +
                        " modes");
  }
  // a_j = (c_j + i d_j) / 2 with Majoranas
  //   c_j = X_{U(j)} X_j Z_{P(j)},  d_j = X_{U(j)} Y_j Z_{R(j)}.
  Bits update = 0;
  Bits parity = 0;
  Bits remainder = 0;
  if (mapping == FermionMapping::jordan_wigner) {
    parity = low_mask(mode);
    remainder = parity;
  } else {
    FenwickTree tree(num_modes);
    for (int q : tree.update_set(mode)) update |= bit(q);
    for (int q : tree.parity_set(mode)) parity |= bit(q);
    for (int q : tree.remainder_set(mode)) remainder |= bit(q);
  }
  const Bits self = bit(mode);

  PauliTerm c;
  c.num_qubits = num_modes;
  c.x_mask = update | self;
  c.z_mask = parity;
  c.coefficient = 0.5;

  PauliTerm d;
  d.num_qubits = num_modes;
  d.x_mask = update | self;
  d.z_mask = remainder | self;
  d.coefficient = kind == LadderKind::raise ? Complex{0.0, -0.5} : Complex{0.0, 0.5};

  return Observable(num_modes, {c, d});
}

}  // namespace ctmpem
