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

#include "qsim/qae/amplitude_estimation.hpp"

#include <algorithm>
#include <boost/math/special_functions/beta.hpp>
#include <cmath>
#include <map>
#include <numbers>

#include "qsim/error.hpp"

namespace qsim::qae {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxIqaeIterations = 100000;

// Largest admissible 4k+2 scaling whose image of the current interval stays
// inside one half circle (angles measured in full turns).
std::pair<std::uint64_t, bool> find_next_power(std::uint64_t k, bool upper, double theta_l, double theta_u,
                                               double min_ratio) {
  const double old_scaling = 4.0 * static_cast<double>(k) + 2.0;
  const double width = theta_u - theta_l;
  if (!(width > 0.0)) return {k, upper};
  const double max_scaling_d = std::floor(1.0 / (2.0 * width));
  if (max_scaling_d > 4e15) return {k, upper};
  long long scaling = static_cast<long long>(max_scaling_d);
  scaling -= ((scaling - 2) % 4 + 4) % 4;
  while (static_cast<double>(scaling) >= min_ratio * old_scaling) {
    const double sl = static_cast<double>(scaling) * theta_l;
    const double su = static_cast<double>(scaling) * theta_u;
    const double theta_min = sl - std::floor(sl);
    const double theta_max = su - std::floor(su);
    if (theta_min <= theta_max && theta_max <= 0.5 && theta_min <= 0.5)
      return {static_cast<std::uint64_t>((scaling - 2) / 4), true};
    if (theta_max >= 0.5 && theta_max >= theta_min && theta_min >= 0.5)
      return {static_cast<std::uint64_t>((scaling - 2) / 4), false};
    scaling -= 4;
  }
  return {k, upper};
}

}  // namespace

std::pair<double, double> clopper_pearson(std::uint64_t ones, std::uint64_t trials, double failure) {
  if (trials == 0 || ones > trials) throw ConfigError("invalid binomial counts");
  if (!(failure > 0.0 && failure < 1.0)) throw ConfigError("interval failure probability must lie in (0, 1)");
  const double x = static_cast<double>(ones);
  const double n = static_cast<double>(trials);
  const double lo = ones == 0 ? 0.0 : boost::math::ibeta_inv(x, n - x + 1.0, failure / 2.0);
  const double hi = ones == trials ? 1.0 : boost::math::ibeta_inv(x + 1.0, n - x, 1.0 - failure / 2.0);
  return {lo, hi};
}

IqaeResult iterative_qae(const GroverOracle& oracle, const IqaeConfig& config, sim::RngStream& rng) {
  if (!(config.epsilon > 0.0 && config.epsilon < 0.5)) throw ConfigError("IQAE epsilon must lie in (0, 0.5)");
  if (!(config.confidence > 0.0 && config.confidence < 1.0)) throw ConfigError("IQAE confidence must lie in (0, 1)");
  if (config.shots_per_round == 0) throw ConfigError("IQAE needs at least one shot per round");

  const double eps = config.epsilon;
  const double ratio = config.min_ratio;
  const int max_rounds = static_cast<int>(std::log(ratio * kPi / 8.0 / eps) / std::log(ratio)) + 1;
  const double round_failure = (1.0 - config.confidence) / max_rounds;

  IqaeResult res;
  double theta_l = 0.0;
  double theta_u = 0.25;
  std::uint64_t k = 0;
  bool upper = true;

  sim::Statevector state = oracle.prepared();
  std::uint64_t applied = 0;
  std::uint64_t same_power_shots = 0;
  std::uint64_t same_power_ones = 0;

  for (int iter = 0; theta_u - theta_l > eps / kPi; ++iter) {
    if (iter >= kMaxIqaeIterations) throw ConfigError("IQAE failed to converge");
    const auto [next_k, next_upper] = find_next_power(k, upper, theta_l, theta_u, ratio);
    if (next_k != k || res.rounds.empty()) {
      same_power_shots = 0;
      same_power_ones = 0;
    }
    k = next_k;
    upper = next_upper;
    if (k < applied) {
      state = oracle.prepared();
      applied = 0;
    }
    for (; applied < k; ++applied) oracle.apply_grover(state);

    const double p_one = std::clamp(oracle.flag_probability(state), 0.0, 1.0);
    const std::uint64_t shots = config.shots_per_round;
    const std::uint64_t ones = rng.binomial(shots, p_one);
    res.oracle_calls += shots * k;
    res.shots += shots;
    same_power_shots += shots;
    same_power_ones += ones;

    const auto [a_min, a_max] = clopper_pearson(same_power_ones, same_power_shots, round_failure);
    double th_min;
    double th_max;
    if (upper) {
      th_min = std::acos(1.0 - 2.0 * a_min) / (2.0 * kPi);
      th_max = std::acos(1.0 - 2.0 * a_max) / (2.0 * kPi);
    } else {
      th_min = 1.0 - std::acos(1.0 - 2.0 * a_max) / (2.0 * kPi);
      th_max = 1.0 - std::acos(1.0 - 2.0 * a_min) / (2.0 * kPi);
    }
    const double scaling = 4.0 * static_cast<double>(k) + 2.0;
    const double new_u = (std::floor(scaling * theta_u) + th_max) / scaling;
    const double new_l = (std::floor(scaling * theta_l) + th_min) / scaling;
    // Intersect with the previous interval; guards against rounding drift.
    theta_u = std::min(theta_u, new_u);
    theta_l = std::max(theta_l, new_l);
    if (theta_l > theta_u) std::swap(theta_l, theta_u);

    IqaeRound round;
    round.power = k;
    round.upper_half = upper;
    round.shots = shots;
    round.ones = ones;
    round.z_low = std::pow(std::sin(2.0 * kPi * theta_l), 2);
    round.z_high = std::pow(std::sin(2.0 * kPi * theta_u), 2);
    res.rounds.push_back(round);
  }
  res.z_low = std::pow(std::sin(2.0 * kPi * theta_l), 2);
  res.z_high = std::pow(std::sin(2.0 * kPi * theta_u), 2);
  res.estimate = 0.5 * (res.z_low + res.z_high);
  return res;
}

double qae_phase_to_probability(std::uint64_t outcome, unsigned eval_qubits) {
  const double theta = 4.0 * kPi * static_cast<double>(outcome) / std::ldexp(1.0, static_cast<int>(eval_qubits));
  return 0.5 * (1.0 - std::cos(theta / 2.0));
}

std::vector<double> qae_readout_distribution(const GroverOracle& oracle, unsigned eval_qubits) {
  if (eval_qubits == 0 || eval_qubits > 12) throw ConfigError("evaluation qubits must lie in [1, 12]");
  if (eval_qubits + oracle.width() > sim::Statevector::kMaxQubits) throw ConfigError("QAE register too wide");
  const std::size_t m = std::size_t{1} << eval_qubits;
  const std::size_t dim = std::size_t{1} << oracle.width();
  // Blocks Q^b chi for every evaluation basis value b.
  std::vector<std::vector<sim::cplx>> blocks(m);
  sim::Statevector work = oracle.prepared();
  for (std::size_t b = 0; b < m; ++b) {
    if (b > 0) oracle.apply_grover(work);
    const auto a = work.amplitudes();
    blocks[b].assign(a.begin(), a.end());
  }
  // Inverse Fourier transform over the evaluation register.
  std::vector<sim::cplx> twiddle(m);
  for (std::size_t t = 0; t < m; ++t)
    twiddle[t] = std::polar(1.0, -2.0 * kPi * static_cast<double>(t) / static_cast<double>(m));
  std::vector<double> dist(m, 0.0);
  const double scale = 1.0 / static_cast<double>(m);
  for (std::size_t y = 0; y < m; ++y) {
    for (std::size_t x = 0; x < dim; ++x) {
      sim::cplx acc{};
      for (std::size_t b = 0; b < m; ++b) acc += twiddle[(b * y) % m] * blocks[b][x];
      dist[y] += std::norm(acc * scale);
    }
  }
  return dist;
}

QaeResult canonical_qae(const GroverOracle& oracle, const QaeConfig& config, sim::RngStream& rng) {
  if (config.runs == 0 || config.shots_per_run == 0) throw ConfigError("QAE needs at least one run and shot");
  const std::vector<double> dist = qae_readout_distribution(oracle, config.eval_qubits);
  const sim::Sampler sampler(dist);
  const std::uint64_t calls_per_shot = (std::uint64_t{1} << config.eval_qubits) - 1;
  QaeResult res;
  for (unsigned r = 0; r < config.runs; ++r) {
    std::map<std::uint64_t, std::uint64_t> counts;
    for (std::uint64_t s = 0; s < config.shots_per_run; ++s) ++counts[sampler.draw(rng)];
    auto best = counts.begin();
    for (auto it = counts.begin(); it != counts.end(); ++it)
      if (it->second > best->second) best = it;
    res.run_estimates.push_back(qae_phase_to_probability(best->first, config.eval_qubits));
    res.oracle_calls += calls_per_shot * config.shots_per_run;
  }
  res.estimate = median(res.run_estimates);
  return res;
}

double median(std::span<const double> values) {
  if (values.empty()) throw ConfigError("median of an empty sample");
  std::vector<double> v(values.begin(), values.end());
  const std::size_t mid = (v.size() - 1) / 2;
  std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
  return v[mid];
}

unsigned median_runs(double confidence) {
  if (!(confidence > 0.0 && confidence < 1.0)) throw ConfigError("confidence must lie in (0, 1)");
  const double p = 8.0 / (kPi * kPi);
  for (unsigned s = 1; s < 999; s += 2) {
    // P(Binomial(s, p) >= (s + 1) / 2)
    double tail = 0.0;
    for (unsigned j = (s + 1) / 2; j <= s; ++j)
      tail += std::exp(std::lgamma(s + 1.0) - std::lgamma(j + 1.0) - std::lgamma(s - j + 1.0) + j * std::log(p) +
                       (s - j) * std::log1p(-p));
    if (tail >= confidence) return s;
  }
  throw ConfigError("confidence too close to 1 for the median trick");
}

}  // namespace qsim::qae
