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
#include <ostream>
#include <string>

#include "qsim/encoding/encoding.hpp"
#include "qsim/error.hpp"
#include "qsim/inner/inner_product.hpp"
#include "qsim/inner/shot_budget.hpp"
#include "support.hpp"

namespace qsim::inner {
namespace {

using testing::random_positive;

TEST(NormalQuantile, MatchesReference) {
  EXPECT_NEAR(normal_quantile(0.975), 1.959963984540054, 1e-12);
  EXPECT_NEAR(z_single(0.9), 1.6448536269514722, 1e-12);
  EXPECT_NEAR(z_split(0.95), 2.241402727604947, 1e-12);
  EXPECT_NEAR(normal_quantile(0.5), 0.0, 1e-15);
  EXPECT_NEAR(normal_quantile(1e-10), -6.361340902404056, 1e-11);
  EXPECT_THROW(normal_quantile(1.0), ConfigError);
}

TEST(ShotBudget, ReferenceCounts) {
  EXPECT_EQ(shots_swap(0.5, 0.01, 0.95), 36014u);
  EXPECT_EQ(shots_ancilla_free(0.5, 0.01, 0.95), 7203u);
  // y-free rule for the ancilla-free power estimator: z^2 / (4 eps^2).
  EXPECT_EQ(shots_power_ancilla_free(0.05, 0.9), 271u);
  EXPECT_EQ(with_floor(3), kMinShots);
  EXPECT_EQ(with_floor(500), 500u);
}

TEST(ShotBudget, TightRulesGrowAsAccuracyShrinks) {
  for (double eps : {0.1, 0.05, 0.01}) {
    EXPECT_LE(shots_power_ancilla_free_tight(0.4, eps, 0.9), shots_power_ancilla_free(eps, 0.9));
    EXPECT_GT(shots_power_swap(0.5, 0.4, eps / 2, 0.9), shots_power_swap(0.5, 0.4, eps, 0.9));
    EXPECT_GT(shots_boe_swap(eps / 2, 0.9), shots_boe_swap(eps, 0.9));
  }
}

TEST(OverlapCircuits, ProbabilityIdentities) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto a = encoding::normalize_affine(random_positive(8, seed), 0.0);
    const auto b = encoding::normalize_affine(random_positive(8, seed + 100), 0.0);
    double p = 0.0;
    for (std::size_t j = 0; j < 8; ++j) p += a.values[j] * b.values[j];
    const auto swap = outcome_table(build_overlap_circuit(a, b, Method::kSwap));
    EXPECT_NEAR(swap.pass_zero, 0.5 + 0.5 * p * p, 1e-10);
    const auto af = outcome_table(build_overlap_circuit(a, b, Method::kAncillaFree));
    EXPECT_NEAR(af.pass_zero, p * p, 1e-10);
  }
}

TEST(SwapStatistic, CountsFormula) {
  ShotTally t;
  t.shots = 100;
  t.pass = 80;
  t.pass_zero = 60;
  EXPECT_NEAR(swap_statistic(t), (2.0 * 60 - 80) / 100, 1e-15);
}

struct CoverageCase {
  Scheme scheme;
  qhp::Style style;
  unsigned k;
};

void PrintTo(const CoverageCase& c, std::ostream* os) { *os << "k=" << c.k; }

class EstimatorCoverage : public ::testing::TestWithParam<CoverageCase> {};

TEST_P(EstimatorCoverage, MeetsConfidence) {
  const auto c = GetParam();
  const auto kind = c.scheme == Scheme::kBoeSwap ? encoding::Normalization::kSqrt : encoding::Normalization::kAffine;
  const auto t = encoding::normalize(random_positive(4, 5, 1.0, 3.0), 0.0, kind);
  const auto e = encoding::normalize(random_positive(4, 6, 1.0, 3.0), 0.0, kind);
  const InnerEstimator est(t, e, c.k, c.scheme, c.style);
  sim::RngStream rng(2024, c.k);
  const int trials = 200;
  int hits = 0;
  for (int i = 0; i < trials; ++i) {
    const auto r = est.estimate(0.05, 0.9, rng);
    if (std::abs(r.value - est.exact_value()) < 0.05) ++hits;
    EXPECT_NEAR(r.rescaled, r.value * est.rescale_factor(), 1e-9 * std::abs(r.rescaled) + 1e-15);
  }
  // 0.9 nominal less 3 sigma binomial slack.
  EXPECT_GE(hits / double(trials), 0.9 - 3.0 * std::sqrt(0.09 / trials));
}

INSTANTIATE_TEST_SUITE_P(Schemes, EstimatorCoverage,
                         ::testing::Values(CoverageCase{Scheme::kAmplitudeAncillaFree, qhp::Style::kNoMidReset, 2},
                                           CoverageCase{Scheme::kAmplitudeSwap, qhp::Style::kNoMidReset, 2},
                                           CoverageCase{Scheme::kBoeSwap, qhp::Style::kNoMidReset, 1}),
                         [](const ::testing::TestParamInfo<CoverageCase>& info) {
                           switch (info.param.scheme) {
                             case Scheme::kAmplitudeAncillaFree: return std::string("AncillaFree");
                             case Scheme::kAmplitudeSwap: return std::string("Swap");
                             case Scheme::kBoeSwap: return std::string("BidirectionalSwap");
                           }
                           return std::string("Unknown");
                         });

TEST(InnerEstimator, PassRateIsQhpSuccess) {
  const auto t = encoding::normalize_affine(random_positive(4, 8), 0.0);
  const auto e = encoding::normalize_affine(random_positive(4, 9), 0.0);
  const InnerEstimator est(t, e, 2, Scheme::kAmplitudeAncillaFree, qhp::Style::kNoMidReset);
  EXPECT_NEAR(est.qhp_success(), qhp::success_probability(t.values, 2), 1e-12);
  const auto& table = est.source().table();
  EXPECT_NEAR(table.pass_zero, est.exact_value() * est.exact_value(), 1e-10);
  EXPECT_NEAR(table.pass_zero + table.pass_nonzero + table.fail, 1.0, 1e-10);
}

}  // namespace
}  // namespace qsim::inner
