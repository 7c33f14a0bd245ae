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

#ifndef CTMPEM_MITIGATION_HPP
#define CTMPEM_MITIGATION_HPP

#include <cstdint>
#include <span>

#include "ctmpem/counts.hpp"
#include "ctmpem/ctmp_model.hpp"
#include "ctmpem/grouping.hpp"
#include "ctmpem/random.hpp"

namespace ctmpem {

struct Estimate {
  double value = 0.0;
  double std_error = 0.0;
};

inline constexpr std::uint64_t kMaxMitigationSamples = 100'000'000;

/// ceil(e^{4 gamma}) * total_shots, capped at 1e8.
std::uint64_t default_mitigation_samples(double gamma, std::uint64_t total_shots);

/// Signed Monte-Carlo estimate of sum_x O(x) (A^{-1} p)(x) for the empirical
/// distribution p, using
///   A^{-1} = e^{2 gamma} sum_k (-1)^k Pois_gamma(k) B^k,  B = I + G / gamma.
/// Each sample resamples x from the counts, draws k, walks k steps of the
/// B-chain and records (-1)^k e^{2 gamma} O(x_k).
///
/// With gamma == 0 the raw expectation and its shot standard error are
/// returned. Throws ConsistencyError if the model's gamma is stale,
/// ArgumentError for zero samples or empty counts, ShapeError for width
/// mismatches.
Estimate mitigate_expectation(const CountsMap &counts, const CtmpModel &model,
                              std::span<const DiagonalTerm> terms, std::uint64_t num_samples,
                              RandomStream &rng);

}  // namespace ctmpem

#endif  // CTMPEM_MITIGATION_HPP
