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

#ifndef CTMPEM_EIGENSOLVER_HPP
#define CTMPEM_EIGENSOLVER_HPP

#include <span>
#include <vector>

#include "ctmpem/pauli.hpp"

namespace ctmpem {

inline constexpr int kMaxExactQubits = 12;

/// out = O * in over the full 2^n space.
void apply_observable(const Observable &observable, std::span<const Complex> in, std::span<Complex> out);

/// Smallest eigenvalue via Lanczos with full reorthogonalization on the
/// Pauli-action matvec; diagonal observables are minimized entry by entry.
/// Throws SizeError above 12 qubits and ValidityError for non-Hermitian input.
double exact_ground_energy(const Observable &observable);

}  // namespace ctmpem

#endif  // CTMPEM_EIGENSOLVER_HPP
