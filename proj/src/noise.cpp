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

#include "ctmpem/noise.hpp"

#include <algorithm>
#include <vector>

#include "ctmpem/error.hpp"
#include "ctmpem/parallel.hpp"

namespace ctmpem {

namespace {
constexpr std::uint64_t kNoiseBlock = 1 << 16;
}

Bits apply_readout_noise(Bits ideal, const CtmpModel &model, RandomStream &rng) {
  Bits x = ideal;
  double elapsed = 0.0;
  for (;;) {
    const double rate = model.outflow(x);
    if (rate <= 0.0) {
      return x;
    }
    elapsed += rng.exponential(rate);
    if (elapsed > 1.0) {
      return x;
    }
    x = model.transition(x, rng.uniform() * rate);
  }
}

CountsMap apply_readout_noise(const CountsMap &ideal, const CtmpModel &model, RandomStream &rng) {
  if (ideal.num_qubits() != model.num_qubits()) {
    throw ShapeError("counts have " + std::to_string(ideal.num_qubits()) + " qubits, noise model has " +
                     std::to_string(model.num_qubits()));
  }
  struct Task {
    Bits outcome;
    std::uint64_t shots;
  };
  std::vector<Task> tasks;
  for (const auto &[outcome, count] : ideal.entries()) {
    for (std::uint64_t first = 0; first < count; first += kNoiseBlock) {
      tasks.push_back({outcome, std::min(kNoiseBlock, count - first)});
    }
  }
  const std::uint64_t base_seed = rng.next_u64();
  std::vector<std::vector<Bits>> results(tasks.size());
  parallel_for(tasks.size(), [&](std::size_t i) {
    RandomStream stream(derive_seed(base_seed, i));
    auto &out = results[i];
    out.reserve(tasks[i].shots);
    for (std::uint64_t s = 0; s < tasks[i].shots; ++s) {
      out.push_back(apply_readout_noise(tasks[i].outcome, model, stream));
    }
  });
  CountsMap noisy(ideal.num_qubits());
  for (const auto &block : results) {
    for (Bits b : block) {
      noisy.add(b);
    }
  }
  return noisy;
}

}  // namespace ctmpem
