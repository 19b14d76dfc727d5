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
#include <string>
#include <vector>

#include "qsim/classical/classical.hpp"
#include "qsim/error.hpp"
#include "qsim/qae/amplitude_estimation.hpp"

namespace qsim::classical {
namespace {

std::vector<double> checked_magnitudes(std::span<const double> v) {
  for (double x : v)
    if (!(x >= 0.0)) throw AssumptionError("sample access needs a non-negative vector");
  return {v.begin(), v.end()};
}

// Same order as the shot cap of the circuit estimators.
constexpr double kSampleCap = 2e8;

}  // namespace

SampleAccess::SampleAccess(std::span<const double> v) : values_(checked_magnitudes(v)), tree_(values_) {
  if (!(tree_.node(0, 0) > 0.0)) throw AssumptionError("sample access needs a non-zero vector");
}

std::size_t SampleAccess::sample(sim::RngStream& rng) const {
  std::size_t i = 0;
  for (unsigned l = 0; l < tree_.depth(); ++l) {
    const double parent = tree_.node(l, i);
    const double left = tree_.node(l + 1, 2 * i);
    const double u = rng.uniform() * parent * parent;
    i = 2 * i + (u < left * left ? 0 : 1);
  }
  // Rounding can land on a zero leaf only with vanishing probability; step to
  // the sibling so the estimator never divides by zero.
  if (values_[i] == 0.0) i ^= 1;
  return i;
}

unsigned sampling_groups(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw ConfigError("sampling confidence must lie in (0, 1)");
  return 6 * static_cast<unsigned>(std::ceil(std::log2(1.0 / (1.0 - alpha))));
}

std::uint64_t sampling_group_size(double epsilon) {
  if (!(epsilon > 0.0)) throw ConfigError("sampling accuracy must be positive");
  const double size = std::ceil(9.0 / (2.0 * epsilon * epsilon) * (1.0 - 1e-13));
  if (!(size <= kSampleCap))
    throw AssumptionError("sampling accuracy " + std::to_string(epsilon) + " needs more than " +
                          std::to_string(static_cast<std::uint64_t>(kSampleCap)) + " samples per group");
  return static_cast<std::uint64_t>(size);
}

SamplingEstimate sampled_inner_product(const SampleAccess& v, std::span<const double> w, unsigned groups,
                                       std::uint64_t group_size, sim::RngStream& rng) {
  if (w.size() != v.size()) throw AssumptionError("series lengths differ");
  if (groups == 0 || group_size == 0) throw ConfigError("sampling needs at least one group and one sample");
  if (static_cast<double>(groups) * static_cast<double>(group_size) > kSampleCap)
    throw AssumptionError("requested sample count exceeds the simulation cap");
  SamplingEstimate est;
  est.groups = groups;
  est.group_size = group_size;
  const double norm2 = v.norm_squared();
  std::vector<double> means(groups);
  for (unsigned g = 0; g < groups; ++g) {
    double acc = 0.0;
    for (std::uint64_t s = 0; s < group_size; ++s) {
      const std::size_t j = v.sample(rng);
      acc += norm2 * w[j] / v.entry(j);
    }
    means[g] = acc / static_cast<double>(group_size);
  }
  est.value = qae::median(means);
  est.samples = static_cast<std::uint64_t>(groups) * group_size;
  return est;
}

SamplingEstimate sampled_inner_product(const SampleAccess& v, std::span<const double> w, double epsilon,
                                       double alpha, sim::RngStream& rng) {
  return sampled_inner_product(v, w, sampling_groups(alpha), sampling_group_size(epsilon), rng);
}

}  // namespace qsim::classical
