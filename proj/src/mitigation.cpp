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

#include "ctmpem/mitigation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "ctmpem/error.hpp"
#include "ctmpem/parallel.hpp"

namespace ctmpem {

namespace {
constexpr std::uint64_t kSampleBlock = 1 << 16;

struct Moments {
  double sum = 0.0;
  double sum_sq = 0.0;
};
}  // namespace

std::uint64_t default_mitigation_samples(double gamma, std::uint64_t total_shots) {
  const double factor = std::ceil(std::exp(4.0 * gamma));
  const double wanted = factor * static_cast<double>(total_shots);
  if (wanted >= static_cast<double>(kMaxMitigationSamples)) {
    return kMaxMitigationSamples;
  }
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(wanted));
}

Estimate mitigate_expectation(const CountsMap &counts, const CtmpModel &model, std::span<const DiagonalTerm> terms,
                              std::uint64_t num_samples, RandomStream &rng) {
  if (counts.num_qubits() != model.num_qubits()) {
    throw ShapeError("counts have " + std::to_string(counts.num_qubits()) + " qubits, model has " +
                     std::to_string(model.num_qubits()));
  }
  if (counts.empty()) {
    throw ArgumentError("cannot mitigate empty counts");
  }
  if (num_samples == 0) {
    throw ArgumentError("num_samples must be at least 1");
  }
  const double gamma = model.gamma();
  if (gamma == 0.0) {
    return {expectation_from_counts(counts, terms), expectation_std_error(counts, terms)};
  }

  std::vector<Bits> outcomes;
  std::vector<std::uint64_t> cumulative;
  std::uint64_t running = 0;
  for (const auto &[outcome, c] : counts.entries()) {
    running += c;
    outcomes.push_back(outcome);
    cumulative.push_back(running);
  }
  const double total = static_cast<double>(running);
  const double scale = std::exp(2.0 * gamma);

  const std::uint64_t base_seed = rng.next_u64();
  const std::size_t blocks = static_cast<std::size_t>((num_samples + kSampleBlock - 1) / kSampleBlock);
  std::vector<Moments> partial(blocks);
  parallel_for(blocks, [&](std::size_t b) {
    RandomStream stream(derive_seed(base_seed, b));
    std::poisson_distribution<int> poisson(gamma);
    const std::uint64_t n = std::min(kSampleBlock, num_samples - b * kSampleBlock);
    Moments m;
    for (std::uint64_t s = 0; s < n; ++s) {
      auto draw = static_cast<std::uint64_t>(stream.uniform() * total);
      auto it = std::upper_bound(cumulative.begin(), cumulative.end(), draw);
      Bits x = outcomes[static_cast<std::size_t>(it - cumulative.begin())];
      const int k = poisson(stream.engine());
      for (int step = 0; step < k; ++step) {
        // B = I + G / gamma: stay with probability 1 - Gamma(x) / gamma,
        // otherwise take a transition chosen proportionally to its rate.
        x = model.transition(x, stream.uniform() * gamma);
      }
      double v = scale * diagonal_value(x, terms);
      if (k & 1) v = -v;
      m.sum += v;
      m.sum_sq += v * v;
    }
    partial[b] = m;
  });

  Moments all;
  for (const auto &m : partial) {
    all.sum += m.sum;
    all.sum_sq += m.sum_sq;
  }
  const double n = static_cast<double>(num_samples);
  const double mean = all.sum / n;
  if (num_samples == 1) {
    return {mean, std::numeric_limits<double>::infinity()};
  }
  const double var = std::max(0.0, (all.sum_sq - n * mean * mean) / (n - 1.0));
  return {mean, std::sqrt(var / n)};
}

}  // namespace ctmpem
