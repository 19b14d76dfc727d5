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

#include <cmath>
#include <string>

#include "qsim/encoding/encoding.hpp"
#include "qsim/error.hpp"

namespace qsim::encoding {

unsigned log2_exact(std::size_t n) {
  if (n < 2 || (n & (n - 1)) != 0)
    throw AssumptionError("series length " + std::to_string(n) + " is not a power of two >= 2");
  unsigned k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  return k;
}

NormalizedSeries normalize_affine(std::span<const double> raw, double eta, bool require_positive) {
  log2_exact(raw.size());
  NormalizedSeries out;
  out.kind = Normalization::kAffine;
  out.eta = eta;
  out.values.resize(raw.size());
  double ss = 0.0;
  for (std::size_t j = 0; j < raw.size(); ++j) {
    const double shifted = raw[j] - eta;
    if (!std::isfinite(shifted)) throw AssumptionError("series contains a non-finite value");
    if (require_positive && !(shifted > 0.0))
      throw AssumptionError("series entry " + std::to_string(j) + " is not positive after shifting by eta");
    out.values[j] = shifted;
    ss += shifted * shifted;
  }
  if (!(ss > 0.0)) throw AssumptionError("series is identically zero after shifting");
  out.rho = 1.0 / std::sqrt(ss);
  for (double& v : out.values) v *= out.rho;
  return out;
}

NormalizedSeries normalize_sqrt(std::span<const double> raw, double eta) {
  log2_exact(raw.size());
  NormalizedSeries out;
  out.kind = Normalization::kSqrt;
  out.eta = eta;
  out.values.resize(raw.size());
  double sum = 0.0;
  for (std::size_t j = 0; j < raw.size(); ++j) {
    const double shifted = raw[j] - eta;
    if (!(shifted > 0.0))
      throw AssumptionError("series entry " + std::to_string(j) + " is not positive after shifting by eta");
    out.values[j] = std::sqrt(shifted);
    sum += shifted;
  }
  out.rho = 1.0 / std::sqrt(sum);
  for (double& v : out.values) v *= out.rho;
  return out;
}

NormalizedSeries normalize(std::span<const double> raw, double eta, Normalization kind) {
  return kind == Normalization::kAffine ? normalize_affine(raw, eta) : normalize_sqrt(raw, eta);
}

StateTree::StateTree(std::span<const double> leaves) : depth_(log2_exact(leaves.size())) {
  levels_.resize(depth_ + 1);
  levels_[depth_].assign(leaves.begin(), leaves.end());
  for (double v : levels_[depth_])
    if (!(v >= 0.0)) throw AssumptionError("state tree leaves must be non-negative");
  for (unsigned l = depth_; l-- > 0;) {
    const auto& below = levels_[l + 1];
    auto& here = levels_[l];
    here.resize(below.size() / 2);
    for (std::size_t i = 0; i < here.size(); ++i) here[i] = std::hypot(below[2 * i], below[2 * i + 1]);
  }
}

double StateTree::angle(unsigned l, std::size_t i) const {
  if (l >= depth_) throw ConfigError("leaf nodes carry no rotation angle");
  return 2.0 * std::atan2(levels_[l + 1][2 * i + 1], levels_[l + 1][2 * i]);
}

}  // namespace qsim::encoding
