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

#ifndef CTMPEM_RANDOM_HPP
#define CTMPEM_RANDOM_HPP

#include <cstdint>
#include <random>
#include <string_view>

namespace ctmpem {

/// Mixes a 64-bit value (splitmix64 finalizer).
std::uint64_t mix_seed(std::uint64_t value);

/// Derives an independent child seed from a parent seed and a stream name.
std::uint64_t derive_seed(std::uint64_t parent, std::string_view name);

/// Derives an independent child seed from a parent seed and an index.
std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t index);

/// A seeded pseudo-random stream. Children obtained with `derive` are
/// independent of the parent's draw position, so work can be split into
/// named or indexed sub-streams without changing results.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : seed_(seed), engine_(mix_seed(seed)) {}

  std::uint64_t seed() const { return seed_; }

  RandomStream derive(std::string_view name) const { return RandomStream(derive_seed(seed_, name)); }
  RandomStream derive(std::uint64_t index) const { return RandomStream(derive_seed(seed_, index)); }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Exponential waiting time with the given rate (> 0).
  double exponential(double rate);

  double normal();

  std::mt19937_64 &engine() { return engine_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace ctmpem

#endif  // CTMPEM_RANDOM_HPP
