// Copyright 2026 The qsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QSIM_PARALLEL_HPP_
#define QSIM_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace qsim {

// Worker count: hardware concurrency, capped by the QSIM_THREADS environment
// variable when it holds a positive integer.
unsigned thread_budget();

// Runs body(i) for i in [0, n). Iterations must be independent; results are
// deterministic as long as each iteration derives its randomness from i.
// Calls made from inside a worker run serially.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace qsim

#endif  // QSIM_PARALLEL_HPP_
