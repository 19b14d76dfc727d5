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

#ifndef QSIM_QAE_AMPLITUDE_ESTIMATION_HPP_
#define QSIM_QAE_AMPLITUDE_ESTIMATION_HPP_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "qsim/qae/grover.hpp"
#include "qsim/sim/rng.hpp"

namespace qsim::qae {

// Exact Clopper-Pearson interval for `ones` successes in `trials`, with total
// two-sided failure probability `failure`.
std::pair<double, double> clopper_pearson(std::uint64_t ones, std::uint64_t trials, double failure);

// Iterative amplitude estimation with Clopper-Pearson intervals. `epsilon` is
// the half-width target on z, `confidence` the probability that the final
// interval covers z.
struct IqaeConfig {
  double epsilon = 0.01;
  double confidence = 0.95;
  std::uint64_t shots_per_round = 100;
  double min_ratio = 2.0;
};

struct IqaeRound {
  std::uint64_t power = 0;
  bool upper_half = true;
  std::uint64_t shots = 0;
  std::uint64_t ones = 0;
  double z_low = 0.0;
  double z_high = 1.0;
};

struct IqaeResult {
  double estimate = 0.0;
  double z_low = 0.0;
  double z_high = 1.0;
  // Grover iterate applications summed over all shots.
  std::uint64_t oracle_calls = 0;
  std::uint64_t shots = 0;
  std::vector<IqaeRound> rounds;
};

IqaeResult iterative_qae(const GroverOracle& oracle, const IqaeConfig& config, sim::RngStream& rng);

// Phase-estimation amplitude estimation with `eval_qubits` evaluation qubits.
// Each run draws `shots_per_run` readouts and keeps the most frequent one;
// the estimate is the median over the runs.
struct QaeConfig {
  unsigned eval_qubits = 6;
  unsigned runs = 11;
  std::uint64_t shots_per_run = 1;
};

struct QaeResult {
  double estimate = 0.0;
  std::vector<double> run_estimates;
  std::uint64_t oracle_calls = 0;
};

// Readout distribution over the evaluation register.
std::vector<double> qae_readout_distribution(const GroverOracle& oracle, unsigned eval_qubits);
double qae_phase_to_probability(std::uint64_t outcome, unsigned eval_qubits);
QaeResult canonical_qae(const GroverOracle& oracle, const QaeConfig& config, sim::RngStream& rng);

// Median of an odd-length (or any) sample; the lower middle for even sizes.
double median(std::span<const double> values);

// Number of runs needed by the median trick for overall confidence
// `confidence` when each run is within tolerance with probability 8/pi^2.
unsigned median_runs(double confidence);

}  // namespace qsim::qae

#endif  // QSIM_QAE_AMPLITUDE_ESTIMATION_HPP_
