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

#include "ctmpem/counts.hpp"

#include <string>

#include "ctmpem/error.hpp"

namespace ctmpem {

CountsMap::CountsMap(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxBitsWidth) {
    throw SizeError("counts width " + std::to_string(num_qubits) + " outside [1, 63]");
  }
}

void CountsMap::add(Bits outcome, std::uint64_t count) {
  if ((outcome & ~low_mask(num_qubits_)) != 0) {
    throw ArgumentError("outcome does not fit in " + std::to_string(num_qubits_) + " bits");
  }
  if (count == 0) {
    return;
  }
  entries_[outcome] += count;
  total_ += count;
}

std::uint64_t CountsMap::count(Bits outcome) const {
  auto it = entries_.find(outcome);
  return it == entries_.end() ? 0 : it->second;
}

void CountsMap::merge(const CountsMap &other) {
  if (other.num_qubits_ != num_qubits_) {
    throw ShapeError("cannot merge counts of different widths");
  }
  for (const auto &[outcome, count] : other.entries_) {
    entries_[outcome] += count;
  }
  total_ += other.total_;
}

}  // namespace ctmpem
