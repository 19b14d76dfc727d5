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

#include "qsim/qae/qae_inner.hpp"

#include <algorithm>
#include <cmath>

#include "qsim/error.hpp"
#include "qsim/inner/inner_product.hpp"
#include "qsim/qhp/power.hpp"

namespace qsim::qae {
namespace {

std::vector<sim::Control> open_controls(const std::vector<sim::Register>& regs) {
  std::vector<sim::Control> cs;
  for (const auto& r : regs)
    for (unsigned q : r) cs.push_back({q, false});
  return cs;
}

sim::Circuit with_flag(const sim::Circuit& body, std::vector<sim::Control> controls) {
  const unsigned flag = body.width();
  sim::Circuit f(flag + 1);
  f.append(body, 0);
  f.mcx(std::move(controls), flag);
  return f;
}

void check_pair(const encoding::NormalizedSeries& s, const encoding::NormalizedSeries& p,
                encoding::Normalization want) {
  if (s.size() != p.size()) throw AssumptionError("series lengths differ");
  if (s.kind != want || p.kind != want) throw ConfigError("series normalization does not match the encoding");
}

}  // namespace

GroverOracle make_power_oracle(const encoding::NormalizedSeries& series, const encoding::NormalizedSeries& price,
                               unsigned k, GroverMode mode) {
  check_pair(series, price, encoding::Normalization::kAffine);
  const auto lt = encoding::load_amplitude(encoding::StateTree(series.values));
  const auto lp = encoding::load_amplitude(encoding::StateTree(price.values));
  const auto power = qhp::build_power_circuit(lt, k, qhp::Style::kNoMidReset);
  const auto ic = inner::build_inner_circuit(power, lp, inner::Method::kAncillaFree);
  std::vector<sim::Register> watched = ic.power.checks;
  watched.push_back(ic.result);
  return GroverOracle(with_flag(ic.circuit, open_controls(watched)), ic.circuit.width(), mode);
}

BoeOracles make_boe_oracles(const encoding::NormalizedSeries& series, const encoding::NormalizedSeries& price,
                            unsigned k, unsigned split_level, GroverMode mode) {
  check_pair(series, price, encoding::Normalization::kSqrt);
  const auto lt = encoding::load_boe(encoding::StateTree(series.values), split_level);
  const auto lp = encoding::load_boe(encoding::StateTree(price.values), split_level);
  const auto power = qhp::build_power_circuit(lt, k, qhp::Style::kNoMidReset);
  const auto ic = inner::build_inner_circuit(power, lp, inner::Method::kSwap);
  std::vector<sim::Register> checks = ic.power.checks;
  GroverOracle pass(with_flag(ic.circuit, open_controls(checks)), ic.circuit.width(), mode);
  checks.push_back(ic.result);
  GroverOracle symmetric(with_flag(ic.circuit, open_controls(checks)), ic.circuit.width(), mode);
  return {std::move(pass), std::move(symmetric)};
}

AeEstimate estimate_probability(const GroverOracle& oracle, double epsilon_z, double confidence,
                                const AeSettings& settings, sim::RngStream& rng) {
  AeEstimate est;
  est.epsilon_z = epsilon_z;
  est.stages = 1;
  if (settings.engine == Engine::kCanonical) {
    QaeConfig cfg;
    cfg.eval_qubits = settings.eval_qubits;
    cfg.runs = settings.runs > 0 ? settings.runs : median_runs(confidence);
    const QaeResult r = canonical_qae(oracle, cfg, rng);
    est.z = r.estimate;
    est.oracle_calls = r.oracle_calls;
    return est;
  }
  IqaeConfig cfg;
  cfg.epsilon = std::min(epsilon_z, 0.49);
  cfg.confidence = confidence;
  cfg.shots_per_round = settings.shots_per_round;
  cfg.min_ratio = settings.min_ratio;
  const IqaeResult r = iterative_qae(oracle, cfg, rng);
  est.z = r.estimate;
  est.z_low = r.z_low;
  est.z_high = r.z_high;
  est.oracle_calls = r.oracle_calls;
  return est;
}

PowerQaeEstimator::PowerQaeEstimator(const encoding::NormalizedSeries& series,
                                     const encoding::NormalizedSeries& price, unsigned k, GroverMode mode)
    : oracle_(make_power_oracle(series, price, k, mode)), exact_(0.0), rescale_(1.0) {
  for (std::size_t j = 0; j < series.size(); ++j)
    exact_ += price.values[j] * std::pow(series.values[j], static_cast<double>(k));
  rescale_ = std::pow(series.rho, -static_cast<double>(k)) / price.rho;
}

AeEstimate PowerQaeEstimator::estimate(double epsilon, double confidence, const AeSettings& settings,
                                       sim::RngStream& rng) const {
  if (!(epsilon > 0.0)) throw ConfigError("accuracy epsilon must be positive");
  if (settings.engine == Engine::kCanonical) {
    AeEstimate est = estimate_probability(oracle_, epsilon, confidence, settings, rng);
    est.value = std::sqrt(std::max(0.0, est.z));
    est.rescaled = est.value * rescale_;
    return est;
  }
  const double eps = std::min(epsilon, 0.49);
  const unsigned max_stages = 2 + static_cast<unsigned>(std::ceil(std::log(1.0 / eps) / std::log(4.0)));
  const double stage_confidence = 1.0 - (1.0 - confidence) / max_stages;

  AeEstimate last;
  std::uint64_t calls = 0;
  double eps_z = eps;
  for (unsigned stage = 1; stage <= max_stages; ++stage) {
    sim::RngStream stage_rng = rng.split(stage);
    last = estimate_probability(oracle_, eps_z, stage_confidence, settings, stage_rng);
    calls += last.oracle_calls;
    last.stages = stage;
    const double y_low = std::sqrt(std::max(0.0, last.z_low));
    const double target = eps * std::max(y_low, eps);
    const double half_width = 0.5 * (last.z_high - last.z_low);
    if (half_width <= target || stage == max_stages) break;
    eps_z = std::max(eps_z / 4.0, target);
  }
  last.oracle_calls = calls;
  last.value = std::sqrt(std::max(0.0, last.z));
  last.rescaled = last.value * rescale_;
  return last;
}

BoeQaeEstimator::BoeQaeEstimator(const encoding::NormalizedSeries& series, const encoding::NormalizedSeries& price,
                                 unsigned k, unsigned split_level, GroverMode mode)
    : oracles_(make_boe_oracles(series, price, k, split_level, mode)), exact_(0.0), rescale_(1.0) {
  for (std::size_t j = 0; j < series.size(); ++j) {
    const double p = std::pow(series.values[j], static_cast<double>(k));
    exact_ += price.values[j] * price.values[j] * p * p;
  }
  rescale_ = std::pow(series.rho, -2.0 * static_cast<double>(k)) * std::pow(price.rho, -2.0);
}

AeEstimate BoeQaeEstimator::estimate(double epsilon, double confidence, const AeSettings& settings,
                                     sim::RngStream& rng) const {
  const double sub_confidence = (1.0 + confidence) / 2.0;
  sim::RngStream rng_pass = rng.split(1);
  sim::RngStream rng_sym = rng.split(2);
  const AeEstimate pass = estimate_probability(oracles_.pass, epsilon / 3.0, sub_confidence, settings, rng_pass);
  AeEstimate est = estimate_probability(oracles_.symmetric, epsilon / 3.0, sub_confidence, settings, rng_sym);
  est.z_pass = pass.z;
  est.oracle_calls += pass.oracle_calls;
  est.stages = 2;
  est.value = 2.0 * est.z - pass.z;
  est.rescaled = est.value * rescale_;
  return est;
}

}  // namespace qsim::qae
