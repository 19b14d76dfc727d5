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

#include <benchmark/benchmark.h>

#include <vector>

#include "qsim/assembly/pipeline.hpp"
#include "qsim/classical/classical.hpp"
#include "qsim/encoding/encoding.hpp"
#include "qsim/inner/inner_product.hpp"
#include "qsim/qae/qae_inner.hpp"
#include "qsim/sim/rng.hpp"

namespace {

using namespace qsim;

const std::vector<double> kTemps{3.2, 5.7, 8.1, 4.4};
const std::vector<double> kPrices{22.5, 31.0, 27.8, 25.3};

void BM_AncillaFreeEstimate(benchmark::State& state) {
  const auto t = encoding::normalize_affine(kTemps, 0.0);
  const auto e = encoding::normalize_affine(kPrices, 0.0);
  const inner::InnerEstimator est(t, e, 2, inner::Scheme::kAmplitudeAncillaFree, qhp::Style::kNoMidReset);
  sim::RngStream rng(3);
  for (auto _ : state) benchmark::DoNotOptimize(est.estimate_with_shots(static_cast<std::uint64_t>(state.range(0)), rng));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_AncillaFreeEstimate)->RangeMultiplier(10)->Range(1000, 1000000);

void BM_IterativeQae(benchmark::State& state) {
  const auto t = encoding::normalize_affine(kTemps, 0.0);
  const auto e = encoding::normalize_affine(kPrices, 0.0);
  const qae::PowerQaeEstimator est(t, e, static_cast<unsigned>(state.range(0)));
  sim::RngStream rng(4);
  for (auto _ : state) benchmark::DoNotOptimize(est.estimate(1e-3, 0.95, {}, rng));
}
BENCHMARK(BM_IterativeQae)->DenseRange(1, 3)->ArgName("k");

void BM_LengthSquaredSampling(benchmark::State& state) {
  const auto e = encoding::normalize_affine(kPrices, 0.0);
  const classical::SampleAccess access(e.values);
  const std::vector<double> w{0.1, 0.4, 0.2, 0.3};
  sim::RngStream rng(5);
  for (auto _ : state)
    benchmark::DoNotOptimize(classical::sampled_inner_product(access, w, 1u, static_cast<std::uint64_t>(state.range(0)), rng));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_LengthSquaredSampling)->RangeMultiplier(10)->Range(1000, 1000000);

void BM_EvaluateVariant(benchmark::State& state) {
  assembly::VariantConfig cfg;
  cfg.variant = static_cast<assembly::Variant>(state.range(0));
  cfg.forced_epsilon = 0.04;
  for (auto _ : state) {
    benchmark::DoNotOptimize(assembly::evaluate(cfg, kTemps, kPrices));
    ++cfg.seed;
  }
}
BENCHMARK(BM_EvaluateVariant)
    ->Arg(static_cast<int>(assembly::Variant::kA))
    ->Arg(static_cast<int>(assembly::Variant::kB))
    ->Arg(static_cast<int>(assembly::Variant::kC))
    ->Arg(static_cast<int>(assembly::Variant::kSampling))
    ->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
