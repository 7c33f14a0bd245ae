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

#ifndef CTMPEM_PARALLEL_HPP
#define CTMPEM_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace ctmpem {

/// Caps the number of worker threads used by the library. 0 restores the
/// default (hardware concurrency).
void set_max_threads(unsigned count);
unsigned max_threads();

/// Runs `task(i)` for every i in [0, count). Tasks must write to disjoint
/// outputs; callers combine results in index order so the outcome never
/// depends on the thread count.
void parallel_for(std::size_t count, const std::function<void(std::size_t)> &task);

}  // namespace ctmpem

#endif  // CTMPEM_PARALLEL_HPP
