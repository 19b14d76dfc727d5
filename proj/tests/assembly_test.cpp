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
#include <vector>

#include "qsim/assembly/budget.hpp"
#include "qsim/assembly/experiments.hpp"
#include "qsim/assembly/pipeline.hpp"
#include "qsim/assembly/resources.hpp"
#include "qsim/classical/classical.hpp"
#include "qsim/encoding/encoding.hpp"
#include "qsim/error.hpp"
#include "support.hpp"

namespace qsim::assembly {
namespace {

const std::vector<double> kTemps{1.4, 2.6, 1.9, 2.2};
const std::vector<double> kPrices{2.1, 1.3, 2.8, 1.7};

TEST(Budget, SingleDegreeExample) {
  const std::vector<double> b{1.0, 1.0};
  const auto budget = allocate_budget(b, 1.0, 0.1, 0.9);
  ASSERT_EQ(budget.degree(), 1u);
  EXPECT_NEAR(budget.terms[0].epsilon, 0.1, 1e-15);
  EXPECT_NEAR(budget.terms[1].epsilon, 0.1, 1e-15);
  EXPECT_TRUE(budget.terms[0].classical);
  EXPECT_NEAR(budget.terms[1].alpha, 0.9, 1e-15);
}

TEST(Budget, FormulaAndConfidenceSplit) {
  const std::vector<double> b{3.0, -2.0, 0.5, 0.25};
  const double rho = 0.3, eps = 0.05;
  const auto budget = allocate_budget(b, rho, eps, 0.9);
  for (unsigned k = 1; k <= 3; ++k) {
    EXPECT_NEAR(budget.terms[k].epsilon, eps * std::pow(rho, k - 1.0) / (3.0 * std::abs(b[k])), 1e-15);
    EXPECT_NEAR(budget.terms[k].alpha, 2.9 / 3.0, 1e-15);
    EXPECT_NEAR(budget.terms[k].weight, 1.0 / 3.0, 1e-15);
  }
}

TEST(Budget, ZeroCoefficients) {
  const std::vector<double> b{1.0, 0.0, 2.0};
  const auto budget = allocate_budget(b, 1.0, 0.1, 0.9);
  EXPECT_TRUE(budget.terms[1].skipped);
  EXPECT_FALSE(budget.terms[2].skipped);
  EXPECT_THROW(allocate_budget(std::vector<double>{0.0, 0.0}, 1.0, 0.1, 0.9), ConfigError);
}

TEST(Budget, ConstantTerm) {
  EXPECT_NEAR(constant_term(std::vector<double>(4, 0.5)), 2.0, 1e-15);
  EXPECT_NEAR(constant_term(std::vector<double>{0.6, 0.8}), 1.4, 1e-15);
}

TEST(Budget, ConversionRatiosDominance) {
  for (std::size_t n : {4u, 8u, 16u, 32u}) {
    const auto t = testing::random_positive(n, n, 2.0, 12.0);
    const auto e = testing::random_positive(n, n + 1, 20.0, 40.0);
    const auto nt = encoding::normalize_affine(t, 0.0);
    const auto ne = encoding::normalize_affine(e, 0.0);
    ASSERT_LE(nt.rho, 1.0);
    const auto r = conversion_ratios(1234.5, nt.rho, ne.rho, 4);
    for (unsigned k = 0; k < 4; ++k) EXPECT_LE(r[4], r[k] * (1 + 1e-9));
  }
}

TEST(Variant, NamesRoundTrip) {
  for (auto v : {Variant::kA, Variant::kB, Variant::kC, Variant::kD, Variant::kExact, Variant::kPoly,
                 Variant::kSampling})
    EXPECT_EQ(parse_variant(variant_name(v)), v);
  EXPECT_EQ(parse_variant("classical_exact"), Variant::kExact);
  EXPECT_THROW(parse_variant("e"), ConfigError);
}

TEST(Evaluate, ClassicalVariants) {
  VariantConfig cfg;
  cfg.variant = Variant::kExact;
  const auto exact = evaluate(cfg, kTemps, kPrices);
  EXPECT_NEAR(exact.value, classical::exact_value(cfg.sigmoid, kTemps, kPrices), 1e-9);
  cfg.variant = Variant::kPoly;
  const auto poly = evaluate(cfg, kTemps, kPrices);
  EXPECT_NEAR(poly.value, poly.poly_value, 1e-9 * poly.value);
}

TEST(Evaluate, ReconstructionIdentity) {
  VariantConfig cfg;
  cfg.variant = Variant::kB;
  cfg.epsilon = 0.1;
  cfg.seed = 4;
  const auto run = evaluate(cfg, kTemps, kPrices);
  double rebuilt = 0.0;
  for (const auto& t : run.terms) rebuilt += t.coefficient * t.exact_rescaled;
  EXPECT_NEAR(rebuilt, run.poly_value, 1e-9 * std::abs(run.poly_value));
}

TEST(Evaluate, DeterministicUnderSeed) {
  VariantConfig cfg;
  cfg.variant = Variant::kC;
  cfg.epsilon = 0.05;
  cfg.seed = 9;
  const auto a = evaluate(cfg, kTemps, kPrices);
  const auto b = evaluate(cfg, kTemps, kPrices);
  EXPECT_EQ(a.value, b.value);
  ASSERT_EQ(a.terms.size(), b.terms.size());
  for (std::size_t k = 0; k < a.terms.size(); ++k) {
    EXPECT_EQ(a.terms[k].estimate, b.terms[k].estimate);
    EXPECT_EQ(a.terms[k].oracle_calls, b.terms[k].oracle_calls);
  }
  cfg.seed = 10;
  EXPECT_NE(evaluate(cfg, kTemps, kPrices).value, a.value);
}

TEST(Evaluate, VariantsAgreeWithinBudgets) {
  VariantConfig cfg;
  cfg.epsilon = 0.05;
  cfg.seed = 3;
  cfg.degree = 2;
  cfg.coefficients = std::vector<double>{1.0, 1.0, 1.0};
  cfg.variant = Variant::kB;
  const auto b = evaluate(cfg, kTemps, kPrices);
  cfg.variant = Variant::kC;
  const auto c = evaluate(cfg, kTemps, kPrices);
  EXPECT_LE(std::abs(b.value - c.value), 2 * cfg.epsilon * std::abs(b.poly_value));
  cfg.variant = Variant::kSampling;
  const auto s = evaluate(cfg, kTemps, kPrices);
  EXPECT_LE(std::abs(s.value - s.poly_value), cfg.epsilon * std::abs(s.poly_value));
}

TEST(EndToEnd, ForcedAccuracyNoMidReset) {
  EndToEndConfig cfg;
  cfg.variant.variant = Variant::kB;
  cfg.variant.forced_epsilon = 0.04;
  cfg.variant.seed = 1;
  cfg.temps = {3.2, 5.7, 8.1, 4.4};
  cfg.prices = {22.5, 31.0, 27.8, 25.3};
  cfg.trials = 5;
  const auto r = end_to_end(cfg);
  EXPECT_LE(r.mean_relative_error, 0.04);
  EXPECT_EQ(r.trials.size(), 5u);
  EXPECT_EQ(r.trials[4].seed, 5u);
}

TEST(Evaluate, RejectsAssumptionViolations) {
  VariantConfig cfg;
  cfg.variant = Variant::kB;
  cfg.eta = 2.0;  // 1.4 - 2 < 0
  EXPECT_THROW(evaluate(cfg, kTemps, kPrices), AssumptionError);
  cfg.eta = 0.0;
  const std::vector<double> three{1, 2, 3};
  EXPECT_THROW(evaluate(cfg, three, three), AssumptionError);
  cfg.variant = Variant::kExact;
  EXPECT_NO_THROW(evaluate(cfg, three, three));
}

TEST(Evaluate, ExplicitCoefficients) {
  VariantConfig cfg;
  cfg.variant = Variant::kPoly;
  cfg.coefficients = std::vector<double>{1.0, 1.0, 1.0};
  cfg.degree = 2;
  const auto r = evaluate(cfg, kTemps, kPrices);
  double direct = 0.0;
  for (std::size_t j = 0; j < 4; ++j) direct += (1 + kTemps[j] + kTemps[j] * kTemps[j]) * kPrices[j];
  EXPECT_NEAR(r.value, direct, 1e-12);
}

TEST(Margin, VanishingCases) {
  VariantConfig cfg;
  cfg.variant = Variant::kExact;
  ContractSpec contract;
  contract.asp = 5.0;
  contract.season_normal = kTemps;
  EXPECT_NEAR(delta_gross_margin(cfg, kTemps, contract, kPrices).value, 0.0, 1e-9);
  contract.season_normal = {2.0, 2.0, 1.5, 3.0};
  contract.asp = 2.0;
  const std::vector<double> flat(4, 2.0);
  EXPECT_NEAR(delta_gross_margin(cfg, kTemps, contract, flat).value, 0.0, 1e-6);
}

TEST(Margin, MatchesDirectSum) {
  VariantConfig cfg;
  cfg.variant = Variant::kExact;
  ContractSpec contract;
  contract.asp = 4.0;
  contract.season_normal = {2.0, 2.1, 1.5, 3.0};
  double direct = 0.0;
  for (std::size_t j = 0; j < 4; ++j)
    direct += (classical::sigmoid(contract.sigmoid, kTemps[j]) -
               classical::sigmoid(contract.sigmoid, contract.season_normal[j])) *
              (contract.asp - kPrices[j]);
  EXPECT_NEAR(delta_gross_margin(cfg, kTemps, contract, kPrices).value, direct, 1e-9 * std::abs(direct) + 1e-9);
}

TEST(Resources, ClosedForms) {
  for (unsigned k = 1; k <= 3; ++k) {
    const auto a = resource_report({Variant::kA, 16, 3, 1, 0.01, 0.9});
    EXPECT_EQ(a[k - 1].width, 8u);
  }
  const auto b = resource_report({Variant::kB, 16, 3, 1, 0.01, 0.9});
  EXPECT_EQ(b[2].width, 12u);
  EXPECT_EQ(b[2].width_built, 12u);
  const auto c = resource_report({Variant::kC, 4, 2, 1, 0.01, 0.9});
  EXPECT_EQ(c[1].width, 5u);
  EXPECT_FALSE(c[1].cost_order.empty());
}

TEST(Experiments, OverlapPair) {
  for (double p : {0.072, 0.767}) {
    const auto [u, v] = overlap_pair(4, p);
    double dot = 0.0, nu = 0.0, nv = 0.0;
    for (std::size_t j = 0; j < 4; ++j) {
      dot += u[j] * v[j];
      nu += u[j] * u[j];
      nv += v[j] * v[j];
    }
    EXPECT_NEAR(dot / std::sqrt(nu * nv), p, 1e-10);
  }
}

TEST(Experiments, LoglogSlope) {
  const std::vector<double> cost{1, 10, 100, 1000};
  const std::vector<double> err{1, 0.1, 0.01, 0.001};
  EXPECT_NEAR(loglog_slope(cost, err), -1.0, 1e-12);
}

TEST(Experiments, RejectsUnknownNamesAndKeys) {
  EXPECT_THROW(run_experiment("nope", "{}"), ConfigError);
  EXPECT_THROW(run_experiment("resource_table", R"({"bogus": 1})"), ConfigError);
  EXPECT_THROW(run_experiment("resource_table", "{"), IoError);
  const auto art = run_experiment("resource_table", R"({"n_values": [4]})");
  EXPECT_EQ(art.name, "resource_table");
  EXPECT_FALSE(art.table.rows.empty());
}

}  // namespace
}  // namespace qsim::assembly
