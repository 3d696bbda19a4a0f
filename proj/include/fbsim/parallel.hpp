/*
 * Copyright 2026 The fbsim Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef FBSIM_PARALLEL_HPP
#define FBSIM_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace fbsim {

/// Worker count: hardware concurrency, capped by DUALITY_SAMPLER_THREADS when
/// that variable holds a positive integer.
std::size_t worker_count();

/// Overrides the worker count for the current process (0 restores the
/// environment-derived default). Used by tests to compare thread counts.
void set_worker_count(std::size_t workers);

/// Calls body(i) for i in [0, count). Work items are independent and write to
/// disjoint outputs, so results never depend on the worker count.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace fbsim

#endif  // FBSIM_PARALLEL_HPP
