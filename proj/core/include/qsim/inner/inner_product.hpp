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

#ifndef QSIM_INNER_INNER_PRODUCT_HPP_
#define QSIM_INNER_INNER_PRODUCT_HPP_

#include <cstdint>

#include "qsim/encoding/encoding.hpp"
#include "qsim/qhp/power.hpp"
#include "qsim/sim/circuit.hpp"
#include "qsim/sim/rng.hpp"

namespace qsim::inner {

enum class Method { kSwap, kAncillaFree };

inline constexpr int kResultTag = 2;

// Power circuit for one series followed by an overlap test against a second
// (price) state. For the swap test the result register is the ancilla and
// reading 0 is the symmetric outcome; for the ancilla-free test the price
// un-loader acts on the power output and the result register is that output.
// Mid-circuit power circuits end with a measurement of `result`.
struct InnerCircuit {
  Method method = Method::kAncillaFree;
  qhp::PowerCircuit power;
  sim::Circuit circuit{0};
  sim::Register result;
  sim::Register price_block;
};

InnerCircuit build_inner_circuit(const qhp::PowerCircuit& power, const encoding::Loader& price, Method method);

// Joint outcome probabilities of a unitary inner circuit:
// pass = all power checks read 0, zero = result register reads 0.
struct OutcomeTable {
  double pass_zero = 0.0;
  double pass_nonzero = 0.0;
  double fail = 0.0;
};
OutcomeTable outcome_table(const InnerCircuit& ic);
OutcomeTable outcome_table(const InnerCircuit& ic, const sim::Statevector& final_state);

struct Shot {
  bool pass = false;
  bool zero = false;
  unsigned loads = 0;
};

// Produces i.i.d. shots of an inner circuit. Unitary circuits are simulated
// once and shots are drawn from the exact outcome table; mid-circuit circuits
// are re-run per shot with sampled measurements and dynamic stopping.
class ShotSource {
 public:
  explicit ShotSource(InnerCircuit ic);

  Shot draw(sim::RngStream& rng) const;
  const InnerCircuit& circuit() const { return ic_; }
  bool per_shot_simulation() const { return !ic_.circuit.is_unitary(); }
  const OutcomeTable& table() const { return table_; }

 private:
  InnerCircuit ic_;
  OutcomeTable table_;
};

struct ShotTally {
  std::uint64_t shots = 0;
  std::uint64_t pass = 0;
  std::uint64_t pass_zero = 0;
  std::uint64_t loads = 0;
};
ShotTally collect(const ShotSource& source, std::uint64_t shots, sim::RngStream& rng);

// Swap-test style statistic (2 #{zero, pass} - #{pass}) / S.
double swap_statistic(const ShotTally& t);

enum class Scheme {
  kAmplitudeAncillaFree,  // sqrt of the joint all-zero frequency
  kAmplitudeSwap,         // sqrt of the swap statistic, two-stage shot sizing
  kBoeSwap,               // swap statistic itself (squared-amplitude target)
};

struct SampleEstimate {
  double value = 0.0;        // normalized target (y_k, or the squared form)
  double rescaled = 0.0;     // value times the de-normalization factor
  std::uint64_t shots = 0;   // final-stage shots
  std::uint64_t pilot_shots = 0;
  std::uint64_t pass = 0;
  std::uint64_t pass_zero = 0;
  double mean_loads = 0.0;   // mid-circuit style only
  bool clamped = false;      // a negative swap statistic was clamped to 0
};

// Estimator for the k-th power inner product against a price series.
// Series must come from the normalization matching the scheme: affine for the
// amplitude schemes, sqrt for the bidirectional one.
class InnerEstimator {
 public:
  InnerEstimator(const encoding::NormalizedSeries& series, const encoding::NormalizedSeries& price, unsigned k,
                 Scheme scheme, qhp::Style style, unsigned split_level = 1);

  // Shot count from the y-free sizing rule of the scheme.
  SampleEstimate estimate(double epsilon, double alpha, sim::RngStream& rng) const;
  SampleEstimate estimate_with_shots(std::uint64_t shots, sim::RngStream& rng) const;

  double exact_value() const { return exact_; }
  double rescale_factor() const { return rescale_; }
  double qhp_success() const { return qhp_success_; }
  unsigned k() const { return k_; }
  Scheme scheme() const { return scheme_; }
  const ShotSource& source() const { return source_; }

 private:
  SampleEstimate finish(const ShotTally& t) const;

  unsigned k_;
  Scheme scheme_;
  double exact_;
  double rescale_;
  double qhp_success_;
  ShotSource source_;
};

// Plain two-state estimators (no power): overlap of two normalized
// non-negative vectors.
double overlap_swap_estimate(const ShotTally& t);
double overlap_ancilla_free_estimate(const ShotTally& t);
InnerCircuit build_overlap_circuit(const encoding::NormalizedSeries& a, const encoding::NormalizedSeries& b,
                                   Method method);

}  // namespace qsim::inner

#endif  // QSIM_INNER_INNER_PRODUCT_HPP_
