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

#include <algorithm>
#include <cmath>

#include "qsim/error.hpp"
#include "qsim/inner/shot_budget.hpp"

namespace qsim::inner {
namespace {

void check(double epsilon, double alpha) {
  if (!(epsilon > 0.0)) throw ConfigError("accuracy epsilon must be positive");
  if (!(alpha > 0.0 && alpha < 1.0)) throw ConfigError("confidence alpha must lie in (0, 1)");
}

// Guards against 7203.0000000001-style round-up of exact products.
std::uint64_t ceil_count(double x) {
  if (!std::isfinite(x)) throw AssumptionError("shot count diverges for these parameters");
  if (x <= 0.0) return 0;
  return static_cast<std::uint64_t>(std::ceil(x * (1.0 - 1e-13)));
}

void check_overlap(double p) {
  if (!(p > 0.0 && p <= 1.0 + 1e-12)) throw AssumptionError("overlap must lie in (0, 1]");
}

}  // namespace

std::uint64_t with_floor(std::uint64_t shots) { return std::max(shots, kMinShots); }

std::uint64_t shots_sqrt_mean(double a, double b, double mean, double sigma2, double epsilon, double alpha) {
  check(epsilon, alpha);
  if (a == 0.0 || !(a * mean + b > 0.0)) throw AssumptionError("need a != 0 and a * mean + b > 0");
  const double z = z_single(alpha);
  return ceil_count(a * a * sigma2 / (4.0 * (a * mean + b) * epsilon * epsilon) * z * z);
}

std::uint64_t shots_swap(double overlap, double epsilon, double alpha) {
  check(epsilon, alpha);
  check_overlap(overlap);
  const double p2 = overlap * overlap;
  const double z = z_single(alpha);
  return ceil_count((1.0 - p2 * p2) / (4.0 * epsilon * epsilon * p2) * z * z);
}

std::uint64_t shots_ancilla_free(double overlap, double epsilon, double alpha) {
  check(epsilon, alpha);
  if (!(overlap >= 0.0 && overlap <= 1.0 + 1e-12)) throw AssumptionError("overlap must lie in [0, 1]");
  const double z = z_single(alpha);
  return ceil_count((1.0 - overlap * overlap) / (4.0 * epsilon * epsilon) * z * z);
}

std::uint64_t shots_power_swap_tight(double qhp_success, double y, double epsilon, double alpha) {
  check(epsilon, alpha);
  if (!(y > 0.0) || !(qhp_success > 0.0)) throw AssumptionError("need a positive inner product");
  const double a2 = 1.0 / qhp_success;  // a_k^2
  const double ay2 = a2 * y * y;
  const double z = z_split(alpha);
  const double factor = std::max(4.0 * y * y * (a2 - 1.0), (1.0 - ay2 * ay2) / ay2);
  return ceil_count(factor / (epsilon * epsilon) * z * z);
}

std::uint64_t shots_power_swap(double qhp_success, double y, double epsilon, double alpha) {
  check(epsilon, alpha);
  if (!(y > 0.0) || !(qhp_success > 0.0)) throw AssumptionError("need a positive inner product");
  const double z = z_split(alpha);
  const double factor = std::max(4.0, qhp_success / (y * y));
  return ceil_count(factor / (epsilon * epsilon) * z * z);
}

std::uint64_t shots_power_ancilla_free_tight(double y, double epsilon, double alpha) {
  check(epsilon, alpha);
  const double z = z_single(alpha);
  return ceil_count((1.0 - y * y) / (4.0 * epsilon * epsilon) * z * z);
}

std::uint64_t shots_power_ancilla_free(double epsilon, double alpha) {
  check(epsilon, alpha);
  const double z = z_single(alpha);
  return ceil_count(1.0 / (4.0 * epsilon * epsilon) * z * z);
}

std::uint64_t shots_boe_swap_tight(double qhp_success, double y, double epsilon, double alpha) {
  check(epsilon, alpha);
  if (!(qhp_success > 0.0)) throw AssumptionError("need a positive power success probability");
  const double a2 = 1.0 / qhp_success;
  const double z = z_split(alpha);
  const double factor = std::max(16.0 * y * y * (a2 - 1.0), 4.0 * (1.0 - a2 * a2 * y * y) / a2);
  return ceil_count(factor / (epsilon * epsilon) * z * z);
}

std::uint64_t shots_boe_swap(double epsilon, double alpha) {
  check(epsilon, alpha);
  const double z = z_split(alpha);
  return ceil_count(16.0 / (epsilon * epsilon) * z * z);
}

}  // namespace qsim::inner
