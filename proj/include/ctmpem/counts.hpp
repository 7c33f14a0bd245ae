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

#ifndef CTMPEM_COUNTS_HPP
#define CTMPEM_COUNTS_HPP

#include <cstdint>
#include <map>

#include "ctmpem/bits.hpp"

namespace ctmpem {

/// Histogram of measured outcomes for an n-qubit register.
class CountsMap {
 public:
  explicit CountsMap(int num_qubits);

  int num_qubits() const { return num_qubits_; }
  std::uint64_t total() const { return total_; }
  bool empty() const { return total_ == 0; }

  /// Adds `count` occurrences of `outcome`. Throws ArgumentError if the
  /// outcome does not fit in num_qubits bits.
  void add(Bits outcome, std::uint64_t count = 1);

  std::uint64_t count(Bits outcome) const;

  /// Sums counts in place. Throws ShapeError on a width mismatch.
  void merge(const CountsMap &other);

  const std::map<Bits, std::uint64_t> &entries() const { return entries_; }

  bool operator==(const CountsMap &other) const = default;

 private:
  int num_qubits_;
  std::uint64_t total_ = 0;
  std::map<Bits, std::uint64_t> entries_;
};

}  // namespace ctmpem

#endif  // CTMPEM_COUNTS_HPP
