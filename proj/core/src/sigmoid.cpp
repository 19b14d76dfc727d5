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

#include <Eigen/Dense>
#include <cmath>
#include <string>

#include "qsim/classical/classical.hpp"
#include "qsim/error.hpp"

namespace qsim::classical {
namespace {

double binomial(unsigned n, unsigned k) {
  double r = 1.0;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Central k-th difference quotient with step h (half-integer offsets for odd k).
double central_derivative(const SigmoidParams& p, unsigned order, double x, double h) {
  double acc = 0.0;
  for (unsigned i = 0; i <= order; ++i) {
    const double offset = (0.5 * order - i) * h;
    const double sign = (i % 2 == 0) ? 1.0 : -1.0;
    acc += sign * binomial(order, i) * sigmoid(p, x + offset);
  }
  return acc / std::pow(h, static_cast<double>(order));
}

void check_domain(const SigmoidParams& p, Domain domain) {
  if (!(domain.hi > domain.lo)) throw ConfigError("fit domain must satisfy lo < hi");
  if (!(domain.hi < p.t0)) throw AssumptionError("fit domain must lie below the curve's pole t0");
}

}  // namespace

double sigmoid(const SigmoidParams& p, double t) {
  if (!(t < p.t0)) throw AssumptionError("sigmoid evaluated at t >= t0 (" + std::to_string(t) + ")");
  return p.a / (1.0 + std::pow(p.b / (t - p.t0), p.c)) + p.d;
}

double Polynomial::operator()(double t) const {
  double acc = 0.0;
  for (std::size_t k = coefficients.size(); k-- > 0;) acc = acc * (t - eta) + coefficients[k];
  return acc;
}

Polynomial fit_taylor(const SigmoidParams& p, unsigned degree, double eta, Domain domain) {
  check_domain(p, domain);
  const double h = 1e-3 * (domain.hi - domain.lo);
  if (!(eta + 0.5 * degree * h < p.t0)) throw AssumptionError("expansion point too close to the pole t0");
  Polynomial poly;
  poly.eta = eta;
  poly.coefficients.resize(degree + 1);
  double factorial = 1.0;
  for (unsigned k = 0; k <= degree; ++k) {
    if (k > 0) factorial *= k;
    double deriv;
    if (k == 0) {
      deriv = sigmoid(p, eta);
    } else {
      const double coarse = central_derivative(p, k, eta, h);
      const double fine = central_derivative(p, k, eta, h / 2.0);
      deriv = (4.0 * fine - coarse) / 3.0;
    }
    poly.coefficients[k] = deriv / factorial;
  }
  return poly;
}

Polynomial fit_least_squares(const SigmoidParams& p, unsigned degree, double eta, Domain domain, unsigned points) {
  check_domain(p, domain);
  if (points < degree + 1) throw ConfigError("least-squares fit needs more nodes than coefficients");
  // Columns in the scaled variable u = (t - eta) / scale for conditioning.
  const double scale = std::max({std::abs(domain.lo - eta), std::abs(domain.hi - eta), 1.0});
  Eigen::MatrixXd vander(points, degree + 1);
  Eigen::VectorXd rhs(points);
  for (unsigned i = 0; i < points; ++i) {
    const double t = domain.lo + (domain.hi - domain.lo) * i / (points - 1);
    const double u = (t - eta) / scale;
    double pw = 1.0;
    for (unsigned k = 0; k <= degree; ++k) {
      vander(i, k) = pw;
      pw *= u;
    }
    rhs(i) = sigmoid(p, t);
  }
  const Eigen::VectorXd c = vander.colPivHouseholderQr().solve(rhs);
  Polynomial poly;
  poly.eta = eta;
  poly.coefficients.resize(degree + 1);
  for (unsigned k = 0; k <= degree; ++k) poly.coefficients[k] = c(k) / std::pow(scale, static_cast<double>(k));
  return poly;
}

Polynomial fit(const SigmoidParams& p, FitMode mode, unsigned degree, double eta, Domain domain) {
  return mode == FitMode::kTaylor ? fit_taylor(p, degree, eta, domain) : fit_least_squares(p, degree, eta, domain);
}

double exact_value(const SigmoidParams& p, std::span<const double> temps, std::span<const double> prices) {
  if (temps.size() != prices.size()) throw AssumptionError("series lengths differ");
  double acc = 0.0;
  for (std::size_t j = 0; j < temps.size(); ++j) acc += sigmoid(p, temps[j]) * prices[j];
  return acc;
}

double power_inner(std::span<const double> temps, std::span<const double> prices, double eta, unsigned k) {
  if (temps.size() != prices.size()) throw AssumptionError("series lengths differ");
  double acc = 0.0;
  for (std::size_t j = 0; j < temps.size(); ++j) acc += prices[j] * std::pow(temps[j] - eta, static_cast<double>(k));
  return acc;
}

double poly_value(const Polynomial& poly, std::span<const double> temps, std::span<const double> prices) {
  double acc = 0.0;
  for (unsigned k = 0; k < poly.coefficients.size(); ++k)
    acc += poly.coefficients[k] * power_inner(temps, prices, poly.eta, k);
  return acc;
}

}  // namespace qsim::classical
