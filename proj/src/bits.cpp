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

#include "ctmpem/bits.hpp"

#include "ctmpem/error.hpp"

namespace ctmpem {

std::string bits_to_string(Bits x, int n) {
  std::string out(static_cast<std::size_t>(n), '0');
  for (int q = 0; q < n; ++q) {
    if (test_bit(x, q)) {
      out[static_cast<std::size_t>(n - 1 - q)] = '1';
    }
  }
  return out;
}

Bits bits_from_string(std::string_view text, int n) {
  if (static_cast<int>(text.size()) != n) {
    throw ArgumentError("bitstring '" + std::string(text) + "' has length " + std::to_string(text.size()) +
                        ", expected " + std::to_string(n));
  }
  Bits x = 0;
  for (int q = 0; q < n; ++q) {
    char c = text[static_cast<std::size_t>(n - 1 - q)];
    if (c == '1') {
      x |= bit(q);
    } else if (c != '0') {
      throw ArgumentError("bitstring '" + std::string(text) + "' contains a character other than 0/1");
    }
  }
  return x;
}

}  // namespace ctmpem
