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

#ifndef CTMPEM_BITS_HPP
#define CTMPEM_BITS_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>

namespace ctmpem {

/// A computational-basis outcome. Bit q holds qubit q.
using Bits = std::uint64_t;

/// Largest register width any bit-level structure supports.
inline constexpr int kMaxBitsWidth = 63;

inline constexpr Bits bit(int q) { return Bits{1} << q; }

inline constexpr Bits low_mask(int n) { return n >= 64 ? ~Bits{0} : (Bits{1} << n) - 1; }

inline constexpr bool test_bit(Bits x, int q) { return ((x >> q) & 1U) != 0; }

inline constexpr int parity(Bits x) { return std::popcount(x) & 1; }

/// +1 for even parity of `x & mask`, -1 for odd.
inline constexpr double parity_sign(Bits x, Bits mask) { return parity(x & mask) ? -1.0 : 1.0; }

/// Renders `x` as an `n`-character string with qubit 0 rightmost.
std::string bits_to_string(Bits x, int n);

/// Parses a string of '0'/'1' with qubit 0 rightmost. Throws ArgumentError on
/// bad characters or a length different from `n`.
Bits bits_from_string(std::string_view text, int n);

}  // namespace ctmpem

#endif  // CTMPEM_BITS_HPP
