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

#ifndef QSIM_INNER_SHOT_BUDGET_HPP_
#define QSIM_INNER_SHOT_BUDGET_HPP_

#include <cstdint>

namespace qsim::inner {

// Inverse standard normal CDF; rational approximation refined by one Halley
// step, |error| < 1e-12 on (0, 1).
double normal_quantile(double p);

// Phi^-1((1 + alpha) / 2): two-sided quantile for a single estimator.
double z_single(double alpha);
// Phi^-1((3 + alpha) / 4): quantile used when two estimators share the budget.
double z_split(double alpha);

// All counts below are the exact ceilings of the asymptotic formulas (0 is
// possible). Estimators apply their own floor of kMinShots.
inline constexpr std::uint64_t kMinShots = 16;

// sqrt(a * mean + b) estimator of a mean with variance sigma2.
std::uint64_t shots_sqrt_mean(double a, double b, double mean, double sigma2, double epsilon, double alpha);
// Swap test on two states with overlap p.
std::uint64_t shots_swap(double overlap, double epsilon, double alpha);
// Ancilla-free overlap test.
std::uint64_t shots_ancilla_free(double overlap, double epsilon, double alpha);

// Power + swap test (amplitude encoding). `qhp_success` is the probability
// that all power checks pass, `y` the target normalized inner product.
std::uint64_t shots_power_swap_tight(double qhp_success, double y, double epsilon, double alpha);
std::uint64_t shots_power_swap(double qhp_success, double y, double epsilon, double alpha);
// Power + ancilla-free test.
std::uint64_t shots_power_ancilla_free_tight(double y, double epsilon, double alpha);
std::uint64_t shots_power_ancilla_free(double epsilon, double alpha);
// Bidirectional encoding + swap test (target is not square-rooted).
std::uint64_t shots_boe_swap_tight(double qhp_success, double y, double epsilon, double alpha);
std::uint64_t shots_boe_swap(double epsilon, double alpha);

std::uint64_t with_floor(std::uint64_t shots);

}  // namespace qsim::inner

#endif  // QSIM_INNER_SHOT_BUDGET_HPP_
