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

#ifndef CTMPEM_NOISE_HPP
#define CTMPEM_NOISE_HPP

#include "ctmpem/counts.hpp"
#include "ctmpem/ctmp_model.hpp"
#include "ctmpem/random.hpp"

namespace ctmpem {

/// One exact draw from column `ideal` of exp(G): the Markov process is run
/// for unit time with exponential holding times.
Bits apply_readout_noise(Bits ideal, const CtmpModel &model, RandomStream &rng);

/// Passes every shot in `ideal` through apply_readout_noise independently.
/// Throws ShapeError if widths differ.
CountsMap apply_readout_noise(const CountsMap &ideal, const CtmpModel &model, RandomStream &rng);

}  // namespace ctmpem

#endif  // CTMPEM_NOISE_HPP
