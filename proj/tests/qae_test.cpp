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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <numeric>

#include "qsim/qae/amplitude_estimation.hpp"
#include "qsim/qae/grover.hpp"
#include "qsim/qae/qae_inner.hpp"
#include "qsim/qhp/power.hpp"
#include "support.hpp"

namespace qsim::qae {
namespace {

using testing::random_positive;

GroverOracle rotation_oracle(double z, GroverMode mode = GroverMode::kGate) {
  sim::Circuit c(2);
  c.gate(1, sim::gates::h());
  c.gate(0, sim::gates::ry(2.0 * std::asin(std::sqrt(z))));
  return GroverOracle(std::move(c), 0, mode);
}

TEST(ClopperPearson, MatchesBetaQuantiles) {
  const auto [lo, hi] = clopper_pearson(3, 10, 0.05);
  EXPECT_NEAR(lo, 0.06673951117773447, 1e-10);
  EXPECT_NEAR(hi, 0.6524528500599973, 1e-10);
  const auto [lo0, hi0] = clopper_pearson(0, 20, 0.01);
  EXPECT_EQ(lo0, 0.0);
  EXPECT_NEAR(hi0, 0.23272950098907447, 1e-10);
}

TEST(Grover, GoodProbabilityAndIterate) {
  const double z = 0.2;
  const auto oracle = rotation_oracle(z);
  EXPECT_NEAR(oracle.good_probability(), z, 1e-14);
  // After m iterates the flag probability is sin^2((2m+1) theta).
  const double theta = std::asin(std::sqrt(z));
  sim::Statevector s = oracle.prepared();
  for (int m = 1; m <= 4; ++m) {
    oracle.apply_grover(s);
    EXPECT_NEAR(oracle.flag_probability(s), std::pow(std::sin((2 * m + 1) * theta), 2), 1e-12);
  }
}

TEST(Grover, ReflectionModeMatchesGateMode) {
  const auto gate = rotation_oracle(0.37, GroverMode::kGate);
  const auto refl = rotation_oracle(0.37, GroverMode::kReflection);
  sim::Statevector a = gate.prepared(), b = refl.prepared();
  for (int m = 0; m < 3; ++m) {
    gate.apply_grover(a);
    refl.apply_grover(b);
  }
  EXPECT_NEAR(std::abs(a.inner(b)), 1.0, 1e-12);
}

TEST(Grover, McxDecomposition) {
  const auto r = mcx_resources(5);
  EXPECT_EQ(r.ancillas, 3u);
  EXPECT_EQ(r.toffolis, 7u);
  EXPECT_EQ(mcx_resources(2).ancillas, 0u);
}

TEST(Iqae, CoversTruthAtConfidence) {
  const double z = 0.3;
  const auto oracle = rotation_oracle(z);
  IqaeConfig cfg;
  cfg.epsilon = 0.01;
  cfg.confidence = 0.9;
  int hits = 0;
  const int trials = 100;
  for (int i = 0; i < trials; ++i) {
    sim::RngStream rng(i + 1);
    const auto r = iterative_qae(oracle, cfg, rng);
    EXPECT_LE(r.z_high - r.z_low, 2 * cfg.epsilon + 1e-12);
    EXPECT_GT(r.oracle_calls, 0u);
    if (z >= r.z_low && z <= r.z_high) ++hits;
  }
  EXPECT_GE(hits, 87);
}

TEST(Iqae, CallsScaleInverselyWithAccuracy) {
  const auto oracle = rotation_oracle(0.3);
  double coarse = 0.0, fine = 0.0;
  for (int i = 0; i < 20; ++i) {
    sim::RngStream a(i), b(i);
    coarse += iterative_qae(oracle, {0.01, 0.9, 100, 2.0}, a).oracle_calls;
    fine += iterative_qae(oracle, {0.0025, 0.9, 100, 2.0}, b).oracle_calls;
  }
  // Four times the accuracy: about four times the calls, far below the
  // sixteen of a sampling estimator.
  EXPECT_GT(fine / coarse, 2.0);
  EXPECT_LT(fine / coarse, 8.0);
}

TEST(CanonicalQae, ReadoutDistribution) {
  const auto oracle = rotation_oracle(0.5);
  const auto dist = qae_readout_distribution(oracle, 4);
  EXPECT_EQ(dist.size(), 16u);
  EXPECT_NEAR(std::accumulate(dist.begin(), dist.end(), 0.0), 1.0, 1e-12);
  // z = 0.5 is exactly representable: theta = pi/4 maps to outcomes 4 and 12.
  EXPECT_NEAR(dist[4] + dist[12], 1.0, 1e-12);
  EXPECT_NEAR(qae_phase_to_probability(4, 4), 0.5, 1e-15);
  EXPECT_NEAR(qae_phase_to_probability(0, 4), 0.0, 1e-15);
  sim::RngStream rng(3);
  EXPECT_NEAR(canonical_qae(oracle, {4, 5, 1}, rng).estimate, 0.5, 1e-12);
}

TEST(Median, OddAndEven) {
  const std::vector<double> odd{3, 1, 2};
  const std::vector<double> even{4, 1, 3, 2};
  EXPECT_EQ(median(odd), 2.0);
  EXPECT_EQ(median(even), 2.0);
  EXPECT_GE(median_runs(0.99), median_runs(0.9));
  EXPECT_EQ(median_runs(0.99) % 2, 1u);
}

TEST(PowerQae, OracleProbabilityIsSquaredTarget) {
  const auto t = encoding::normalize_affine(random_positive(4, 12), 0.0);
  const auto e = encoding::normalize_affine(random_positive(4, 13), 0.0);
  for (unsigned k : {1u, 2u, 3u}) {
    const PowerQaeEstimator est(t, e, k);
    double y = 0.0;
    for (std::size_t j = 0; j < 4; ++j) y += std::pow(t.values[j], k) * e.values[j];
    EXPECT_NEAR(est.exact_value(), y, 1e-12);
    EXPECT_NEAR(est.oracle().good_probability(), y * y, 1e-10);
  }
}

TEST(PowerQae, EstimateWithinAccuracy) {
  const auto t = encoding::normalize_affine(random_positive(4, 14), 0.0);
  const auto e = encoding::normalize_affine(random_positive(4, 15), 0.0);
  const PowerQaeEstimator est(t, e, 2);
  int hits = 0;
  for (int i = 0; i < 40; ++i) {
    sim::RngStream rng(77, i);
    const auto r = est.estimate(0.02, 0.9, AeSettings{}, rng);
    if (std::abs(r.value - est.exact_value()) <= 0.02) ++hits;
  }
  EXPECT_GE(hits, 34);
}

TEST(BoeQae, OracleProbabilities) {
  const auto t = encoding::normalize_sqrt(random_positive(4, 16), 0.0);
  const auto e = encoding::normalize_sqrt(random_positive(4, 17), 0.0);
  const BoeQaeEstimator est(t, e, 1, 1);
  const double pass = est.oracles().pass.good_probability();
  const double sym = est.oracles().symmetric.good_probability();
  EXPECT_NEAR(2.0 * sym - pass, est.exact_value(), 1e-10);
  EXPECT_NEAR(pass, 1.0, 1e-12);
}

}  // namespace
}  // namespace qsim::qae
