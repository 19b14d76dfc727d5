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

#include "qsim/assembly/budget.hpp"

#include <cmath>
#include <numeric>

#include "qsim/error.hpp"

namespace qsim::assembly {

ErrorBudget allocate_budget(std::span<const double> coefficients, double rho, double epsilon, double beta) {
  if (coefficients.size() < 2) throw ConfigError("polynomial degree must be at least 1");
  if (!(epsilon > 0.0)) throw ConfigError("epsilon must be positive");
  if (!(beta > 0.0 && beta < 1.0)) throw ConfigError("beta must lie in (0, 1)");
  if (!(rho > 0.0) || !std::isfinite(rho)) throw AssumptionError("normalization constant must be positive");
  bool any = false;
  for (double b : coefficients) any = any || b != 0.0;
  if (!any) throw ConfigError("all polynomial coefficients are zero");

  const unsigned degree = static_cast<unsigned>(coefficients.size()) - 1;
  const double kk = static_cast<double>(degree);
  ErrorBudget budget;
  budget.epsilon = epsilon;
  budget.beta = beta;
  budget.terms.resize(coefficients.size());
  for (unsigned k = 0; k <= degree; ++k) {
    TermBudget& t = budget.terms[k];
    t.k = k;
    t.coefficient = coefficients[k];
    t.classical = k == 0;
    t.skipped = coefficients[k] == 0.0;
    if (t.skipped) continue;
    t.epsilon = epsilon * std::pow(rho, static_cast<double>(k) - 1.0) / (kk * std::abs(coefficients[k]));
    if (k > 0) {
      t.alpha = (kk - 1.0 + beta) / kk;
      t.weight = 1.0 / kk;
    }
  }
  return budget;
}

double constant_term(std::span<const double> prices) { return std::accumulate(prices.begin(), prices.end(), 0.0); }

std::vector<double> conversion_ratios(double value, double rho_t, double rho_e, unsigned degree) {
  std::vector<double> r(degree + 1);
  for (unsigned k = 0; k <= degree; ++k) r[k] = std::abs(value) * std::pow(rho_t, static_cast<double>(k)) * rho_e;
  return r;
}

}  // namespace qsim::assembly
