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

#include "ctmpem/hubbard.hpp"

#include <string>

#include "ctmpem/error.hpp"

namespace ctmpem {

std::string_view to_string(SpinOrdering ordering) {
  return ordering == SpinOrdering::blocked ? "blocked" : "interleaved";
}

SpinOrdering spin_ordering_from_string(std::string_view name) {
  if (name == "blocked") return SpinOrdering::blocked;
  if (name == "interleaved") return SpinOrdering::interleaved;
  throw ArgumentError("unknown spin ordering '" + std::string(name) + "'");
}

std::vector<std::pair<int, int>> hubbard_chain_edges(int num_sites, bool periodic) {
  std::vector<std::pair<int, int>> edges;
  for (int k = 0; k + 1 < num_sites; ++k) {
    edges.emplace_back(k, k + 1);
  }
  if (periodic && num_sites >= 3) {
    edges.emplace_back(num_sites - 1, 0);
  }
  return edges;
}

Observable build_hubbard(int num_sites, double t, double U, bool periodic, FermionMapping mapping,
                         SpinOrdering ordering) {
  if (num_sites < 1) {
    throw ArgumentError("Hubbard chain needs at least one site, got " + std::to_string(num_sites));
  }
  const int n = 2 * num_sites;
  std::vector<Observable> raise;
  std::vector<Observable> lower;
  for (int m = 0; m < n; ++m) {
    raise.push_back(map_fermion_op(m, n, LadderKind::raise, mapping));
    lower.push_back(map_fermion_op(m, n, LadderKind::lower, mapping));
  }

  Observable h(n);
  for (auto [j, k] : hubbard_chain_edges(num_sites, periodic)) {
    for (int spin = 0; spin < 2; ++spin) {
      int a = spin_orbital(j, spin, num_sites, ordering);
      int b = spin_orbital(k, spin, num_sites, ordering);
      h += (raise[a] * lower[b] + raise[b] * lower[a]) * Complex{-t, 0.0};
    }
  }
  for (int k = 0; k < num_sites; ++k) {
    int up = spin_orbital(k, 0, num_sites, ordering);
    int down = spin_orbital(k, 1, num_sites, ordering);
    h += (raise[up] * lower[up]) * (raise[down] * lower[down]) * Complex{U, 0.0};
  }
  return h.real_part(1e-12);
}

}  // namespace ctmpem
