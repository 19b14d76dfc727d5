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

#ifndef QSIM_QAE_QAE_INNER_HPP_
#define QSIM_QAE_QAE_INNER_HPP_

#include <cstdint>

#include "qsim/encoding/encoding.hpp"
#include "qsim/qae/amplitude_estimation.hpp"
#include "qsim/qae/grover.hpp"
#include "qsim/sim/rng.hpp"

namespace qsim::qae {

enum class Engine { kIterative, kCanonical };

struct AeSettings {
  Engine engine = Engine::kIterative;
  std::uint64_t shots_per_round = 100;
  double min_ratio = 2.0;
  // Canonical engine only; runs == 0 derives the count from the confidence.
  unsigned eval_qubits = 7;
  unsigned runs = 0;
  GroverMode mode = GroverMode::kAuto;
};

struct AeEstimate {
  double value = 0.0;     // normalized target
  double rescaled = 0.0;  // de-normalized target
  double z = 0.0;         // estimated good-state probability (last stage)
  double z_low = 0.0;
  double z_high = 1.0;
  double epsilon_z = 0.0;  // accuracy requested on z in the last stage
  std::uint64_t oracle_calls = 0;
  unsigned stages = 0;
  // Bidirectional variant: the power-success probability sub-estimate.
  double z_pass = 0.0;
};

// Amplitude-encoding oracle: A loads k copies of the series, folds them with
// CNOT rounds and un-loads the price state; R flags the all-zero outcome of
// every data register, so z = y_k^2.
GroverOracle make_power_oracle(const encoding::NormalizedSeries& series, const encoding::NormalizedSeries& price,
                               unsigned k, GroverMode mode = GroverMode::kAuto);

// Bidirectional oracles sharing A (loads, CNOT rounds, swap test):
//   pass:      flags all power checks at 0           (z = success rate)
//   symmetric: flags checks at 0 and swap ancilla 0  (z = (y~ + rate) / 2)
struct BoeOracles {
  GroverOracle pass;
  GroverOracle symmetric;
};
BoeOracles make_boe_oracles(const encoding::NormalizedSeries& series, const encoding::NormalizedSeries& price,
                            unsigned k, unsigned split_level, GroverMode mode = GroverMode::kAuto);

// Runs the chosen engine on an oracle at accuracy epsilon_z on z.
AeEstimate estimate_probability(const GroverOracle& oracle, double epsilon_z, double confidence,
                                const AeSettings& settings, sim::RngStream& rng);

class PowerQaeEstimator {
 public:
  PowerQaeEstimator(const encoding::NormalizedSeries& series, const encoding::NormalizedSeries& price, unsigned k,
                    GroverMode mode = GroverMode::kAuto);

  // Accuracy epsilon on y = sqrt(z). The iterative engine refines in stages
  // until the achieved half-width on z is at most epsilon * max(y_low,
  // epsilon), which bounds the error of sqrt(z) by epsilon.
  AeEstimate estimate(double epsilon, double confidence, const AeSettings& settings, sim::RngStream& rng) const;

  const GroverOracle& oracle() const { return oracle_; }
  double exact_value() const { return exact_; }
  double rescale_factor() const { return rescale_; }

 private:
  GroverOracle oracle_;
  double exact_;
  double rescale_;
};

class BoeQaeEstimator {
 public:
  BoeQaeEstimator(const encoding::NormalizedSeries& series, const encoding::NormalizedSeries& price, unsigned k,
                  unsigned split_level, GroverMode mode = GroverMode::kAuto);

  // y~ = 2 z_symmetric - z_pass, each sub-estimate at epsilon / 3 and
  // confidence (1 + confidence) / 2.
  AeEstimate estimate(double epsilon, double confidence, const AeSettings& settings, sim::RngStream& rng) const;

  const BoeOracles& oracles() const { return oracles_; }
  double exact_value() const { return exact_; }
  double rescale_factor() const { return rescale_; }

 private:
  BoeOracles oracles_;
  double exact_;
  double rescale_;
};

}  // namespace qsim::qae

#endif  // QSIM_QAE_QAE_INNER_HPP_
