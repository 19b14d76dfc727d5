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

#ifndef QSIM_ASSEMBLY_PIPELINE_HPP_
#define QSIM_ASSEMBLY_PIPELINE_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qsim/assembly/budget.hpp"
#include "qsim/classical/classical.hpp"
#include "qsim/qae/qae_inner.hpp"

namespace qsim::assembly {

//   a: amplitude encoding, mid-circuit reset power, ancilla-free sampling
//   b: amplitude encoding, parallel power registers, ancilla-free sampling
//   c: amplitude encoding, parallel power registers, amplitude estimation
//   d: bidirectional encoding, swap test, amplitude estimation
enum class Variant { kA, kB, kC, kD, kExact, kPoly, kSampling };

Variant parse_variant(std::string_view name);
std::string_view variant_name(Variant v);
bool is_quantum(Variant v);

struct VariantConfig {
  Variant variant = Variant::kExact;
  unsigned degree = 3;
  double eta = 0.0;
  double epsilon = 0.1;  // relative accuracy on the value
  double beta = 0.9;     // overall confidence
  unsigned split_level = 1;
  std::uint64_t seed = 0;

  classical::SigmoidParams sigmoid;
  classical::FitMode fit_mode = classical::FitMode::kTaylor;
  classical::Domain domain;
  // Explicit polynomial in (t - eta); replaces the sigmoid fit when set.
  std::optional<std::vector<double>> coefficients;
  // Replaces every budgeted eps_k by this accuracy on the variant's own
  // normalized target (y_k for a, b, c, sampling; the squared form for d).
  std::optional<double> forced_epsilon;

  qae::AeSettings ae;
};

struct TermReport {
  unsigned k = 0;
  double coefficient = 0.0;
  double epsilon = 0.0;  // accuracy passed to the estimator
  double alpha = 1.0;
  bool skipped = false;
  std::string method;
  double estimate = 0.0;        // normalized
  double rescaled = 0.0;        // de-normalized y'_k
  double exact_rescaled = 0.0;  // sum_j e_j (t_j - eta)^k
  std::uint64_t shots = 0;
  std::uint64_t oracle_calls = 0;
  std::uint64_t samples = 0;
  unsigned width = 0;
  sim::Cost depth;
  bool clamped = false;
};

struct RunReport {
  VariantConfig config;
  std::size_t n = 0;
  std::vector<double> coefficients;
  double rho_t = 1.0;
  double rho_e = 1.0;
  double value = 0.0;
  double exact_value = 0.0;  // sum_j f(t_j) e_j (equals poly_value for an explicit polynomial)
  double poly_value = 0.0;
  std::vector<TermReport> terms;
  double seconds = 0.0;  // wall time; never written to output files

  double relative_error_vs_poly() const;
  double relative_error_vs_exact() const;
  std::uint64_t total_shots() const;
  std::uint64_t total_oracle_calls() const;
  std::uint64_t total_samples() const;
};

// Polynomial used by a configuration: the explicit coefficients, or the fit.
classical::Polynomial resolve_polynomial(const VariantConfig& config);

RunReport evaluate(const VariantConfig& config, std::span<const double> temps, std::span<const double> prices);

struct ContractSpec {
  classical::SigmoidParams sigmoid;
  double asp = 0.0;  // agreed sales price
  std::vector<double> season_normal;
};

// sum_j (f(t_j) - f(tau_j)) (asp - e_j) from four bilinear evaluations with
// non-negative price factors: asp * sum f(t), sum f(t) e, asp * sum f(tau),
// sum f(tau) e.
struct MarginReport {
  double value = 0.0;
  RunReport actual_fixed;
  RunReport actual_market;
  RunReport normal_fixed;
  RunReport normal_market;
};

MarginReport delta_gross_margin(const VariantConfig& config, std::span<const double> temps,
                                const ContractSpec& contract, std::span<const double> prices);

}  // namespace qsim::assembly

#endif  // QSIM_ASSEMBLY_PIPELINE_HPP_
