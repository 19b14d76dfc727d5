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

#ifndef QSIM_ASSEMBLY_EXPERIMENTS_HPP_
#define QSIM_ASSEMBLY_EXPERIMENTS_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "qsim/assembly/pipeline.hpp"
#include "qsim/assembly/resources.hpp"
#include "qsim/io/report_io.hpp"

namespace qsim::assembly {

// Swap test against the ancilla-free test on state pairs of prescribed overlap.
struct CompareInnerConfig {
  std::uint64_t seed = 1;
  std::size_t n = 4;
  std::vector<double> overlaps{0.072, 0.767};
  std::uint64_t shots = 10000;
  unsigned repeats = 100;
};

struct CompareInnerPoint {
  double overlap = 0.0;
  std::vector<double> swap;
  std::vector<double> ancilla_free;
  unsigned swap_clamped = 0;  // negative radicands
  double swap_mean = 0.0;
  double swap_variance = 0.0;
  double ancilla_free_mean = 0.0;
  double ancilla_free_variance = 0.0;
};

// Pair of non-negative unit vectors (1, x, .., x) and (x, 1, x, .., x) with
// the requested overlap.
std::pair<std::vector<double>, std::vector<double>> overlap_pair(std::size_t n, double overlap);
std::vector<CompareInnerPoint> compare_inner(const CompareInnerConfig& cfg);

// Amplitude-estimation variant on random series of growing length.
struct ErrorScalingConfig {
  std::uint64_t seed = 1;
  std::vector<std::size_t> n_values{4, 8, 16, 32};
  std::vector<unsigned> k_values{1, 2, 3};
  unsigned runs = 20;      // per dataset
  unsigned datasets = 5;   // independent random series per N
  double base_epsilon = 0.05;
  bool scaled = true;  // eps_k = base * N^(-(k-1)/2); otherwise base for all N
  double confidence = 0.9;
  double t_lo = 2.0, t_hi = 12.0;
  double e_lo = 20.0, e_hi = 40.0;
  qae::AeSettings ae;
};

struct ErrorScalingPoint {
  std::size_t n = 0;
  unsigned k = 0;
  double epsilon = 0.0;
  std::vector<double> exact;                   // per dataset
  std::vector<std::vector<double>> estimates;  // [dataset][run]
  double mean_relative_error = 0.0;
  double median_relative_error = 0.0;
  double mean_oracle_calls = 0.0;
};

std::vector<double> synthetic_series(std::size_t n, double lo, double hi, std::uint64_t seed, std::uint64_t stream);
std::vector<ErrorScalingPoint> error_scaling_k(const ErrorScalingConfig& cfg);
// max/min of the median relative error across N, per k (in k_values order).
std::vector<double> flatness_ratios(const std::vector<ErrorScalingPoint>& points, const std::vector<unsigned>& ks);

// Error against cost for amplitude estimation (oracle calls) and
// length-squared sampling (samples).
struct QaeVsClassicalConfig {
  std::uint64_t seed = 1;
  std::vector<double> temps{3.2, 5.7, 8.1, 4.4};
  std::vector<double> prices{22.5, 31.0, 27.8, 25.3};
  std::vector<unsigned> k_values{1, 2};
  std::vector<double> qae_epsilons;         // empty: 0.05 * 2^-i, i = 0..8
  std::vector<std::uint64_t> group_sizes;   // empty: 16 * 2^i, i = 0..9
  unsigned sampling_groups = 1;
  unsigned repeats = 40;
  double confidence = 0.99;
  qae::AeSettings ae;
};

struct CostPoint {
  std::string method;  // "iqae" or "sampling"
  unsigned k = 0;
  double budget = 0.0;  // eps_z or group size
  double mean_cost = 0.0;
  double mean_abs_error = 0.0;
  double median_abs_error = 0.0;
};

struct QaeVsClassicalResult {
  std::vector<CostPoint> points;
  // Least-squares slope of log median error against log mean cost, per k.
  // The median keeps the rare interval failures allowed by the confidence
  // level from dominating a point.
  std::vector<double> qae_slopes;
  std::vector<double> sampling_slopes;
};

QaeVsClassicalResult qae_vs_classical(const QaeVsClassicalConfig& cfg);
double loglog_slope(const std::vector<double>& cost, const std::vector<double>& error);

// Repeated end-to-end evaluation over seeds base_seed + i.
struct EndToEndConfig {
  VariantConfig variant;
  std::vector<double> temps;
  std::vector<double> prices;
  unsigned trials = 5;
};

struct EndToEndTrial {
  std::uint64_t seed = 0;
  double value = 0.0;
  double relative_error = 0.0;  // against the polynomial value
  bool within_epsilon = false;
};

struct EndToEndResult {
  double poly_value = 0.0;
  double exact_value = 0.0;
  std::vector<EndToEndTrial> trials;
  double mean_relative_error = 0.0;
  double coverage = 0.0;
};

EndToEndResult end_to_end(const EndToEndConfig& cfg);

struct ResourceTableConfig {
  std::vector<Variant> variants{Variant::kA, Variant::kB, Variant::kC, Variant::kD, Variant::kSampling};
  std::vector<std::size_t> n_values{4, 16};
  unsigned degree = 3;
  unsigned split_level = 1;
  double epsilon = 0.01;
  double beta = 0.9;
};

// Named experiment from a JSON configuration. Relative series paths
// ("t_file", "e_file") resolve against base_dir.
io::Artifact run_experiment(std::string_view name, std::string_view config_json,
                            const std::filesystem::path& base_dir = {});

}  // namespace qsim::assembly

#endif  // QSIM_ASSEMBLY_EXPERIMENTS_HPP_
