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

#ifndef QSIM_ASSEMBLY_BUDGET_HPP_
#define QSIM_ASSEMBLY_BUDGET_HPP_

#include <span>
#include <vector>

namespace qsim::assembly {

struct TermBudget {
  unsigned k = 0;
  double coefficient = 0.0;
  double epsilon = 0.0;  // absolute accuracy on the normalized y_k
  double alpha = 1.0;    // per-term confidence
  double weight = 0.0;
  bool skipped = false;  // zero coefficient
  bool classical = false;  // k = 0, computed exactly
};

// Per-term split of a relative accuracy `epsilon` at overall confidence
// `beta`: eps_k = epsilon * rho^(k-1) / (K |b_k|), alpha_k = (K - 1 + beta) / K,
// w_k = 1 / K for k = 1..K. Entry 0 is the classical constant term.
struct ErrorBudget {
  double epsilon = 0.0;
  double beta = 0.0;
  std::vector<TermBudget> terms;

  unsigned degree() const { return static_cast<unsigned>(terms.size()) - 1; }
};

ErrorBudget allocate_budget(std::span<const double> coefficients, double rho, double epsilon, double beta);

// sum_j e_j, the k = 0 inner product.
double constant_term(std::span<const double> prices);

// |v| rho_T^k rho_E: converts a relative target into the normalized
// accuracy required on y_k.
std::vector<double> conversion_ratios(double value, double rho_t, double rho_e, unsigned degree);

}  // namespace qsim::assembly

#endif  // QSIM_ASSEMBLY_BUDGET_HPP_
