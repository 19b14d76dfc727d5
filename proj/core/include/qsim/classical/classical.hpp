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

#ifndef QSIM_CLASSICAL_CLASSICAL_HPP_
#define QSIM_CLASSICAL_CLASSICAL_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "qsim/encoding/encoding.hpp"
#include "qsim/sim/rng.hpp"

namespace qsim::classical {

// Volume-versus-temperature curve
//   f(t) = a / (1 + (b / (t - t0))^c) + d,   valid for t < t0.
struct SigmoidParams {
  double a = 20000.0;
  double b = -35.0;
  double c = 3.0;
  double d = 6000.0;
  double t0 = 40.0;
};

double sigmoid(const SigmoidParams& p, double t);

struct Domain {
  double lo = -15.0;
  double hi = 30.0;
};

enum class FitMode { kTaylor, kLeastSquares };

// f(t) ~ sum_k coefficients[k] * (t - eta)^k
struct Polynomial {
  std::vector<double> coefficients;
  double eta = 0.0;

  unsigned degree() const { return static_cast<unsigned>(coefficients.size()) - 1; }
  double operator()(double t) const;
};

// Taylor coefficients at eta from Richardson-refined central differences
// with base step 1e-3 * (hi - lo).
Polynomial fit_taylor(const SigmoidParams& p, unsigned degree, double eta, Domain domain = {});
// Least squares on `points` equispaced nodes of the domain.
Polynomial fit_least_squares(const SigmoidParams& p, unsigned degree, double eta, Domain domain = {},
                             unsigned points = 512);
Polynomial fit(const SigmoidParams& p, FitMode mode, unsigned degree, double eta, Domain domain = {});

// sum_j f(t_j) e_j
double exact_value(const SigmoidParams& p, std::span<const double> temps, std::span<const double> prices);
// sum_k b_k sum_j e_j (t_j - eta)^k
double poly_value(const Polynomial& poly, std::span<const double> temps, std::span<const double> prices);
// sum_j e_j (t_j - eta)^k
double power_inner(std::span<const double> temps, std::span<const double> prices, double eta, unsigned k);

// Length-squared sampling by a root-to-leaf walk of the norm tree of a
// non-negative vector.
class SampleAccess {
 public:
  explicit SampleAccess(std::span<const double> v);

  std::size_t sample(sim::RngStream& rng) const;
  double norm_squared() const { return tree_.node(0, 0) * tree_.node(0, 0); }
  double entry(std::size_t i) const { return values_[i]; }
  std::size_t size() const { return values_.size(); }

 private:
  std::vector<double> values_;
  encoding::StateTree tree_;
};

// Median of means of Z = |v|^2 w_J / v_J with J drawn from v. Group size
// ceil(9 / (2 eps^2)), 6 * ceil(lg(1 / (1 - alpha))) groups; the additive
// error is at most eps * |v| * |w| with probability >= alpha.
struct SamplingEstimate {
  double value = 0.0;
  std::uint64_t samples = 0;
  unsigned groups = 0;
  std::uint64_t group_size = 0;
};

unsigned sampling_groups(double alpha);
std::uint64_t sampling_group_size(double epsilon);
SamplingEstimate sampled_inner_product(const SampleAccess& v, std::span<const double> w, double epsilon,
                                       double alpha, sim::RngStream& rng);
SamplingEstimate sampled_inner_product(const SampleAccess& v, std::span<const double> w, unsigned groups,
                                       std::uint64_t group_size, sim::RngStream& rng);

}  // namespace qsim::classical

#endif  // QSIM_CLASSICAL_CLASSICAL_HPP_
