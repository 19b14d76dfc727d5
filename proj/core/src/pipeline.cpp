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

#include "qsim/assembly/pipeline.hpp"

#include <chrono>
#include <cmath>
#include <numeric>

#include "qsim/error.hpp"
#include "qsim/inner/inner_product.hpp"
#include "qsim/parallel.hpp"

namespace qsim::assembly {
namespace {

struct Prepared {
  encoding::NormalizedSeries t;
  encoding::NormalizedSeries e;
};

double plain_rho(std::span<const double> raw, double eta) {
  double ss = 0.0;
  for (double x : raw) ss += (x - eta) * (x - eta);
  if (!(ss > 0.0)) throw AssumptionError("series is identically zero after shifting");
  return 1.0 / std::sqrt(ss);
}

void fill_quantum_term(const VariantConfig& cfg, const Prepared& amp, const Prepared& sq, const TermBudget& budget,
                       std::span<const double> temps, TermReport& out) {
  const unsigned k = budget.k;
  sim::RngStream rng(cfg.seed, k);
  const double eps = cfg.forced_epsilon.value_or(budget.epsilon);
  out.epsilon = eps;
  switch (cfg.variant) {
    case Variant::kA:
    case Variant::kB: {
      const auto style = cfg.variant == Variant::kA ? qhp::Style::kMidReset : qhp::Style::kNoMidReset;
      const inner::InnerEstimator est(amp.t, amp.e, k, inner::Scheme::kAmplitudeAncillaFree, style);
      const auto r = est.estimate(eps, budget.alpha, rng);
      out.method = cfg.variant == Variant::kA ? "ancilla_free_mid_reset" : "ancilla_free_parallel";
      out.estimate = r.value;
      out.rescaled = r.rescaled;
      out.shots = r.shots + r.pilot_shots;
      out.clamped = r.clamped;
      out.width = est.source().circuit().circuit.width();
      out.depth = est.source().circuit().circuit.depth();
      return;
    }
    case Variant::kC: {
      const qae::PowerQaeEstimator est(amp.t, amp.e, k, cfg.ae.mode);
      const auto r = est.estimate(eps, budget.alpha, cfg.ae, rng);
      out.method = cfg.ae.engine == qae::Engine::kIterative ? "iqae" : "canonical_qae";
      out.estimate = r.value;
      out.rescaled = r.rescaled;
      out.oracle_calls = r.oracle_calls;
      out.width = est.oracle().width();
      out.depth = est.oracle().circuit().depth();
      return;
    }
    case Variant::kD: {
      // Budget on y'_k converted to the squared-amplitude target.
      const double kk = static_cast<double>(k);
      const double convert = std::pow(sq.t.rho, 2.0 * kk) * sq.e.rho * sq.e.rho / (std::pow(amp.t.rho, kk) * amp.e.rho);
      const double eps_sq = cfg.forced_epsilon.value_or(budget.epsilon * convert);
      out.epsilon = eps_sq;
      const qae::BoeQaeEstimator est(sq.t, sq.e, k, cfg.split_level, cfg.ae.mode);
      const auto r = est.estimate(eps_sq, budget.alpha, cfg.ae, rng);
      out.method = cfg.ae.engine == qae::Engine::kIterative ? "boe_iqae" : "boe_canonical_qae";
      out.estimate = r.value;
      out.rescaled = r.rescaled;
      out.oracle_calls = r.oracle_calls;
      out.width = est.oracles().symmetric.width();
      out.depth = est.oracles().symmetric.circuit().depth();
      return;
    }
    case Variant::kSampling: {
      // Error eps * |E'| * |w| on y'_k equals eps_k on y_k when eps = eps_k * a_k.
      std::vector<double> w(temps.size());
      for (std::size_t j = 0; j < w.size(); ++j) w[j] = std::pow(temps[j] - cfg.eta, static_cast<double>(k));
      const double a_k = qhp::norm_constant(amp.t.values, k);
      const classical::SampleAccess access(amp.e.values);
      const auto r = classical::sampled_inner_product(access, w, eps * a_k, budget.alpha, rng);
      out.method = "length_squared_sampling";
      // The sampled vector is the normalized price series.
      out.rescaled = r.value / amp.e.rho;
      out.estimate = out.rescaled * std::pow(amp.t.rho, static_cast<double>(k)) * amp.e.rho;
      out.samples = r.samples;
      return;
    }
    case Variant::kExact:
    case Variant::kPoly:
      break;
  }
  throw ConfigError("variant has no per-term estimator");
}

}  // namespace

Variant parse_variant(std::string_view name) {
  if (name == "a") return Variant::kA;
  if (name == "b") return Variant::kB;
  if (name == "c") return Variant::kC;
  if (name == "d") return Variant::kD;
  if (name == "exact" || name == "classical_exact") return Variant::kExact;
  if (name == "poly" || name == "classical_poly") return Variant::kPoly;
  if (name == "sampling" || name == "classical_sampling") return Variant::kSampling;
  throw ConfigError("unknown variant '" + std::string(name) + "'");
}

std::string_view variant_name(Variant v) {
  switch (v) {
    case Variant::kA: return "a";
    case Variant::kB: return "b";
    case Variant::kC: return "c";
    case Variant::kD: return "d";
    case Variant::kExact: return "exact";
    case Variant::kPoly: return "poly";
    case Variant::kSampling: return "sampling";
  }
  return "?";
}

bool is_quantum(Variant v) { return v == Variant::kA || v == Variant::kB || v == Variant::kC || v == Variant::kD; }

double RunReport::relative_error_vs_poly() const { return std::abs(value - poly_value) / std::abs(poly_value); }
double RunReport::relative_error_vs_exact() const { return std::abs(value - exact_value) / std::abs(exact_value); }

std::uint64_t RunReport::total_shots() const {
  return std::accumulate(terms.begin(), terms.end(), std::uint64_t{0},
                         [](std::uint64_t s, const TermReport& t) { return s + t.shots; });
}
std::uint64_t RunReport::total_oracle_calls() const {
  return std::accumulate(terms.begin(), terms.end(), std::uint64_t{0},
                         [](std::uint64_t s, const TermReport& t) { return s + t.oracle_calls; });
}
std::uint64_t RunReport::total_samples() const {
  return std::accumulate(terms.begin(), terms.end(), std::uint64_t{0},
                         [](std::uint64_t s, const TermReport& t) { return s + t.samples; });
}

classical::Polynomial resolve_polynomial(const VariantConfig& config) {
  if (config.coefficients) {
    if (config.coefficients->size() < 2) throw ConfigError("explicit polynomial needs degree >= 1");
    return {*config.coefficients, config.eta};
  }
  if (config.degree < 1) throw ConfigError("polynomial degree must be at least 1");
  return classical::fit(config.sigmoid, config.fit_mode, config.degree, config.eta, config.domain);
}

RunReport evaluate(const VariantConfig& config, std::span<const double> temps, std::span<const double> prices) {
  const auto start = std::chrono::steady_clock::now();
  if (temps.size() != prices.size()) throw AssumptionError("series lengths differ");
  if (temps.empty()) throw AssumptionError("series are empty");
  if (!(config.epsilon > 0.0)) throw ConfigError("epsilon must be positive");
  if (!(config.beta > 0.0 && config.beta < 1.0)) throw ConfigError("beta must lie in (0, 1)");
  if (config.forced_epsilon && !(*config.forced_epsilon > 0.0)) throw ConfigError("forced epsilon must be positive");

  const classical::Polynomial poly = resolve_polynomial(config);
  RunReport rep;
  rep.config = config;
  rep.n = temps.size();
  rep.coefficients = poly.coefficients;
  rep.poly_value = classical::poly_value(poly, temps, prices);
  rep.exact_value = config.coefficients ? rep.poly_value : classical::exact_value(config.sigmoid, temps, prices);

  const Variant v = config.variant;
  if (v == Variant::kExact || v == Variant::kPoly) {
    rep.rho_t = plain_rho(temps, config.eta);
    rep.rho_e = plain_rho(prices, 0.0);
    rep.value = v == Variant::kExact ? rep.exact_value : rep.poly_value;
    for (unsigned k = 0; k < poly.coefficients.size(); ++k) {
      TermReport t;
      t.k = k;
      t.coefficient = poly.coefficients[k];
      t.method = "classical";
      t.exact_rescaled = classical::power_inner(temps, prices, config.eta, k);
      t.rescaled = t.exact_rescaled;
      t.estimate = t.rescaled * std::pow(rep.rho_t, static_cast<double>(k)) * rep.rho_e;
      rep.terms.push_back(t);
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
  }

  // Affine series carry the budget; the sampling baseline has no sign
  // requirement on the temperatures.
  Prepared amp{encoding::normalize_affine(temps, config.eta, v != Variant::kSampling),
               encoding::normalize_affine(prices, 0.0, v != Variant::kSampling)};
  Prepared sq;
  if (v == Variant::kD) sq = {encoding::normalize_sqrt(temps, config.eta), encoding::normalize_sqrt(prices, 0.0)};
  rep.rho_t = amp.t.rho;
  rep.rho_e = amp.e.rho;

  const ErrorBudget budget = allocate_budget(poly.coefficients, amp.t.rho, config.epsilon, config.beta);
  rep.terms.resize(budget.terms.size());
  for (unsigned k = 0; k < rep.terms.size(); ++k) {
    TermReport& t = rep.terms[k];
    t.k = k;
    t.coefficient = budget.terms[k].coefficient;
    t.alpha = budget.terms[k].alpha;
    t.epsilon = budget.terms[k].epsilon;
    t.skipped = budget.terms[k].skipped;
    t.exact_rescaled = classical::power_inner(temps, prices, config.eta, k);
  }
  // Constant term: classical and exact.
  rep.terms[0].method = "classical";
  rep.terms[0].rescaled = constant_term(prices);
  rep.terms[0].estimate = rep.terms[0].rescaled * amp.e.rho;

  std::vector<unsigned> todo;
  for (unsigned k = 1; k < rep.terms.size(); ++k)
    if (!rep.terms[k].skipped) todo.push_back(k);
  parallel_for(todo.size(), [&](std::size_t i) {
    const unsigned k = todo[i];
    fill_quantum_term(config, amp, sq, budget.terms[k], temps, rep.terms[k]);
  });
  for (unsigned k = 1; k < rep.terms.size(); ++k)
    if (rep.terms[k].skipped) rep.terms[k].method = "skipped";

  rep.value = 0.0;
  for (const TermReport& t : rep.terms) rep.value += t.coefficient * t.rescaled;
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

MarginReport delta_gross_margin(const VariantConfig& config, std::span<const double> temps,
                                const ContractSpec& contract, std::span<const double> prices) {
  if (contract.season_normal.size() != temps.size()) throw AssumptionError("season-normal series length differs");
  if (!(contract.asp > 0.0)) throw AssumptionError("agreed sales price must be positive");
  VariantConfig cfg = config;
  cfg.sigmoid = contract.sigmoid;
  const std::vector<double> fixed(temps.size(), contract.asp);
  MarginReport m;
  m.actual_fixed = evaluate(cfg, temps, fixed);
  m.actual_market = evaluate(cfg, temps, prices);
  m.normal_fixed = evaluate(cfg, contract.season_normal, fixed);
  m.normal_market = evaluate(cfg, contract.season_normal, prices);
  m.value = (m.actual_fixed.value - m.actual_market.value) - (m.normal_fixed.value - m.normal_market.value);
  return m;
}

}  // namespace qsim::assembly
