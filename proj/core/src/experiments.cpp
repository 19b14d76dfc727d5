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

#include "qsim/assembly/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <json.hpp>
#include <numeric>

#include "qsim/error.hpp"
#include "qsim/inner/inner_product.hpp"
#include "qsim/io/series_io.hpp"
#include "qsim/parallel.hpp"
#include "qsim/qhp/power.hpp"

namespace qsim::assembly {
namespace {

using Json = nlohmann::ordered_json;
using io::format_number;

double mean(const std::vector<double>& v) {
  return v.empty() ? 0.0 : std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double sample_variance(const std::vector<double>& v) {
  if (v.size() < 2) return 0.0;
  const double m = mean(v);
  double ss = 0.0;
  for (double x : v) ss += (x - m) * (x - m);
  return ss / static_cast<double>(v.size() - 1);
}

template <class T>
T get_or(const Json& j, const char* key, T fallback) {
  if (!j.contains(key) || j[key].is_null()) return fallback;
  try {
    return j[key].get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config field '") + key + "': " + e.what());
  }
}

qae::AeSettings parse_ae(const Json& j) {
  qae::AeSettings ae;
  const std::string engine = get_or<std::string>(j, "engine", "iterative");
  if (engine == "iterative") {
    ae.engine = qae::Engine::kIterative;
  } else if (engine == "canonical") {
    ae.engine = qae::Engine::kCanonical;
  } else {
    throw ConfigError("engine must be 'iterative' or 'canonical'");
  }
  ae.shots_per_round = get_or<std::uint64_t>(j, "shots_per_round", ae.shots_per_round);
  ae.eval_qubits = get_or<unsigned>(j, "eval_qubits", ae.eval_qubits);
  ae.runs = get_or<unsigned>(j, "qae_runs", ae.runs);
  return ae;
}

Json ae_json(const qae::AeSettings& ae) {
  Json j;
  j["engine"] = ae.engine == qae::Engine::kIterative ? "iterative" : "canonical";
  j["shots_per_round"] = ae.shots_per_round;
  j["eval_qubits"] = ae.eval_qubits;
  j["qae_runs"] = ae.runs;
  return j;
}

std::vector<double> series_field(const Json& j, const char* inline_key, const char* file_key,
                                 const std::filesystem::path& base_dir) {
  if (j.contains(inline_key)) return get_or<std::vector<double>>(j, inline_key, {});
  if (j.contains(file_key)) {
    std::filesystem::path p = get_or<std::string>(j, file_key, "");
    if (p.is_relative()) p = base_dir / p;
    return io::read_series(p);
  }
  throw ConfigError(std::string("config needs '") + inline_key + "' or '" + file_key + "'");
}

VariantConfig parse_variant_config(const Json& j) {
  VariantConfig c;
  c.variant = parse_variant(get_or<std::string>(j, "variant", "exact"));
  c.degree = get_or<unsigned>(j, "degree", c.degree);
  c.eta = get_or<double>(j, "eta", c.eta);
  c.epsilon = get_or<double>(j, "epsilon", c.epsilon);
  c.beta = get_or<double>(j, "beta", c.beta);
  c.split_level = get_or<unsigned>(j, "split_level", c.split_level);
  c.seed = get_or<std::uint64_t>(j, "seed", c.seed);
  if (j.contains("sigmoid")) {
    const Json& s = j["sigmoid"];
    c.sigmoid = {get_or<double>(s, "a", c.sigmoid.a), get_or<double>(s, "b", c.sigmoid.b),
                 get_or<double>(s, "c", c.sigmoid.c), get_or<double>(s, "d", c.sigmoid.d),
                 get_or<double>(s, "t0", c.sigmoid.t0)};
  }
  const std::string mode = get_or<std::string>(j, "fit_mode", "taylor");
  if (mode == "taylor") {
    c.fit_mode = classical::FitMode::kTaylor;
  } else if (mode == "lsq") {
    c.fit_mode = classical::FitMode::kLeastSquares;
  } else {
    throw ConfigError("fit_mode must be 'taylor' or 'lsq'");
  }
  if (j.contains("domain")) {
    const auto d = get_or<std::vector<double>>(j, "domain", {});
    if (d.size() != 2) throw ConfigError("domain must be [lo, hi]");
    c.domain = {d[0], d[1]};
  }
  if (j.contains("coefficients")) c.coefficients = get_or<std::vector<double>>(j, "coefficients", {});
  if (j.contains("forced_epsilon")) c.forced_epsilon = get_or<double>(j, "forced_epsilon", 0.0);
  c.ae = parse_ae(j);
  return c;
}

std::vector<std::string_view> with_ae(std::vector<std::string_view> keys) {
  for (std::string_view k : {"engine", "shots_per_round", "eval_qubits", "qae_runs"}) keys.push_back(k);
  return keys;
}

void reject_unknown(const Json& j, const std::vector<std::string_view>& known) {
  for (const auto& [key, value] : j.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end())
      throw ConfigError("unknown config field '" + key + "'");
  }
}

io::Artifact compare_inner_artifact(const Json& j) {
  reject_unknown(j, {"seed", "n", "overlaps", "shots", "repeats"});
  CompareInnerConfig cfg;
  cfg.seed = get_or(j, "seed", cfg.seed);
  cfg.n = get_or(j, "n", cfg.n);
  cfg.overlaps = get_or(j, "overlaps", cfg.overlaps);
  cfg.shots = get_or(j, "shots", cfg.shots);
  cfg.repeats = get_or(j, "repeats", cfg.repeats);
  const auto points = compare_inner(cfg);

  io::Artifact a;
  a.name = "compare_inner";
  a.table.header = {"overlap", "repeat", "swap_estimate", "ancilla_free_estimate"};
  Json summary = Json::array();
  for (const auto& p : points) {
    for (unsigned r = 0; r < cfg.repeats; ++r)
      a.table.add({format_number(p.overlap), std::to_string(r), format_number(p.swap[r]),
                   format_number(p.ancilla_free[r])});
    summary.push_back({{"overlap", p.overlap},
                       {"swap_mean", p.swap_mean},
                       {"swap_variance", p.swap_variance},
                       {"swap_clamped", p.swap_clamped},
                       {"ancilla_free_mean", p.ancilla_free_mean},
                       {"ancilla_free_variance", p.ancilla_free_variance},
                       {"variance_ratio", p.swap_variance / p.ancilla_free_variance}});
  }
  Json side;
  side["experiment"] = a.name;
  side["config"] = {{"seed", cfg.seed}, {"n", cfg.n}, {"overlaps", cfg.overlaps}, {"shots", cfg.shots},
                    {"repeats", cfg.repeats}};
  side["seed"] = cfg.seed;
  side["summary"] = std::move(summary);
  a.sidecar = side.dump(2) + "\n";
  return a;
}

io::Artifact error_scaling_artifact(const Json& j) {
  reject_unknown(j, with_ae({"seed", "n_values", "k_values", "runs", "datasets", "base_epsilon", "scaled",
                             "confidence", "t_range", "e_range"}));
  ErrorScalingConfig cfg;
  cfg.seed = get_or(j, "seed", cfg.seed);
  cfg.n_values = get_or(j, "n_values", cfg.n_values);
  cfg.k_values = get_or(j, "k_values", cfg.k_values);
  cfg.runs = get_or(j, "runs", cfg.runs);
  cfg.datasets = get_or(j, "datasets", cfg.datasets);
  cfg.base_epsilon = get_or(j, "base_epsilon", cfg.base_epsilon);
  cfg.scaled = get_or(j, "scaled", cfg.scaled);
  cfg.confidence = get_or(j, "confidence", cfg.confidence);
  const auto tr = get_or(j, "t_range", std::vector<double>{cfg.t_lo, cfg.t_hi});
  const auto er = get_or(j, "e_range", std::vector<double>{cfg.e_lo, cfg.e_hi});
  if (tr.size() != 2 || er.size() != 2) throw ConfigError("ranges must be [lo, hi]");
  cfg.t_lo = tr[0];
  cfg.t_hi = tr[1];
  cfg.e_lo = er[0];
  cfg.e_hi = er[1];
  cfg.ae = parse_ae(j);
  const auto points = error_scaling_k(cfg);

  io::Artifact a;
  a.name = "error_scaling_k";
  a.table.header = {"n", "k", "epsilon", "dataset", "run", "estimate", "exact", "relative_error"};
  Json summary = Json::array();
  for (const auto& p : points) {
    for (std::size_t d = 0; d < p.estimates.size(); ++d)
      for (std::size_t r = 0; r < p.estimates[d].size(); ++r)
        a.table.add({std::to_string(p.n), std::to_string(p.k), format_number(p.epsilon), std::to_string(d),
                     std::to_string(r), format_number(p.estimates[d][r]), format_number(p.exact[d]),
                     format_number(std::abs(p.estimates[d][r] - p.exact[d]) / p.exact[d])});
    summary.push_back({{"n", p.n},
                       {"k", p.k},
                       {"epsilon", p.epsilon},
                       {"mean_relative_error", p.mean_relative_error},
                       {"median_relative_error", p.median_relative_error},
                       {"mean_oracle_calls", p.mean_oracle_calls}});
  }
  Json side;
  side["experiment"] = a.name;
  side["config"] = {{"seed", cfg.seed},       {"n_values", cfg.n_values},         {"k_values", cfg.k_values},
                    {"runs", cfg.runs},       {"datasets", cfg.datasets}, {"base_epsilon", cfg.base_epsilon}, {"scaled", cfg.scaled},
                    {"confidence", cfg.confidence}, {"t_range", {cfg.t_lo, cfg.t_hi}},
                    {"e_range", {cfg.e_lo, cfg.e_hi}}, {"ae", ae_json(cfg.ae)}};
  side["seed"] = cfg.seed;
  side["summary"] = std::move(summary);
  side["flatness_ratio_per_k"] = flatness_ratios(points, cfg.k_values);
  a.sidecar = side.dump(2) + "\n";
  return a;
}

io::Artifact qae_vs_classical_artifact(const Json& j) {
  reject_unknown(j, with_ae({"seed", "t", "e", "k_values", "qae_epsilons", "group_sizes", "sampling_groups",
                             "repeats", "confidence"}));
  QaeVsClassicalConfig cfg;
  cfg.seed = get_or(j, "seed", cfg.seed);
  cfg.temps = get_or(j, "t", cfg.temps);
  cfg.prices = get_or(j, "e", cfg.prices);
  cfg.k_values = get_or(j, "k_values", cfg.k_values);
  cfg.qae_epsilons = get_or(j, "qae_epsilons", cfg.qae_epsilons);
  cfg.group_sizes = get_or(j, "group_sizes", cfg.group_sizes);
  cfg.sampling_groups = get_or(j, "sampling_groups", cfg.sampling_groups);
  cfg.repeats = get_or(j, "repeats", cfg.repeats);
  cfg.confidence = get_or(j, "confidence", cfg.confidence);
  cfg.ae = parse_ae(j);
  const auto res = qae_vs_classical(cfg);

  io::Artifact a;
  a.name = "qae_vs_classical";
  a.table.header = {"method", "k", "budget", "mean_cost", "mean_abs_error", "median_abs_error"};
  for (const auto& p : res.points)
    a.table.add({p.method, std::to_string(p.k), format_number(p.budget), format_number(p.mean_cost),
                 format_number(p.mean_abs_error), format_number(p.median_abs_error)});
  Json side;
  side["experiment"] = a.name;
  side["config"] = {{"seed", cfg.seed},
                    {"t", cfg.temps},
                    {"e", cfg.prices},
                    {"k_values", cfg.k_values},
                    {"qae_epsilons", cfg.qae_epsilons},
                    {"group_sizes", cfg.group_sizes},
                    {"sampling_groups", cfg.sampling_groups},
                    {"repeats", cfg.repeats},
                    {"confidence", cfg.confidence},
                    {"ae", ae_json(cfg.ae)}};
  side["seed"] = cfg.seed;
  side["qae_slopes"] = res.qae_slopes;
  side["sampling_slopes"] = res.sampling_slopes;
  a.sidecar = side.dump(2) + "\n";
  return a;
}

io::Artifact end_to_end_artifact(const Json& j, const std::filesystem::path& base_dir) {
  reject_unknown(j, with_ae({"variant", "degree", "eta", "epsilon", "beta", "split_level", "seed", "sigmoid",
                             "fit_mode", "domain", "coefficients", "forced_epsilon", "trials", "t", "e", "t_file",
                             "e_file"}));
  EndToEndConfig cfg;
  cfg.variant = parse_variant_config(j);
  cfg.temps = series_field(j, "t", "t_file", base_dir);
  cfg.prices = series_field(j, "e", "e_file", base_dir);
  cfg.trials = get_or(j, "trials", cfg.trials);
  const auto res = end_to_end(cfg);

  io::Artifact a;
  a.name = "end_to_end";
  a.table.header = {"trial", "seed", "value", "poly_value", "exact_value", "relative_error", "within_epsilon"};
  for (std::size_t i = 0; i < res.trials.size(); ++i) {
    const auto& t = res.trials[i];
    a.table.add({std::to_string(i), std::to_string(t.seed), format_number(t.value), format_number(res.poly_value),
                 format_number(res.exact_value), format_number(t.relative_error), t.within_epsilon ? "1" : "0"});
  }
  Json side;
  side["experiment"] = a.name;
  const auto& v = cfg.variant;
  side["config"] = {{"variant", variant_name(v.variant)},
                    {"degree", v.degree},
                    {"eta", v.eta},
                    {"epsilon", v.epsilon},
                    {"beta", v.beta},
                    {"split_level", v.split_level},
                    {"seed", v.seed},
                    {"sigmoid", {v.sigmoid.a, v.sigmoid.b, v.sigmoid.c, v.sigmoid.d, v.sigmoid.t0}},
                    {"fit_mode", v.fit_mode == classical::FitMode::kTaylor ? "taylor" : "lsq"},
                    {"domain", {v.domain.lo, v.domain.hi}},
                    {"coefficients", v.coefficients ? Json(*v.coefficients) : Json(nullptr)},
                    {"forced_epsilon", v.forced_epsilon ? Json(*v.forced_epsilon) : Json(nullptr)},
                    {"trials", cfg.trials},
                    {"t", cfg.temps},
                    {"e", cfg.prices},
                    {"ae", ae_json(v.ae)}};
  side["seed"] = v.seed;
  side["coefficients"] = resolve_polynomial(v).coefficients;
  side["poly_value"] = res.poly_value;
  side["exact_value"] = res.exact_value;
  side["mean_relative_error"] = res.mean_relative_error;
  side["coverage"] = res.coverage;
  a.sidecar = side.dump(2) + "\n";
  return a;
}

io::Artifact resource_table_artifact(const Json& j) {
  reject_unknown(j, {"variants", "n_values", "degree", "split_level", "epsilon", "beta"});
  ResourceTableConfig cfg;
  if (j.contains("variants")) {
    cfg.variants.clear();
    for (const auto& name : get_or<std::vector<std::string>>(j, "variants", {})) cfg.variants.push_back(parse_variant(name));
  }
  cfg.n_values = get_or(j, "n_values", cfg.n_values);
  cfg.degree = get_or(j, "degree", cfg.degree);
  cfg.split_level = get_or(j, "split_level", cfg.split_level);
  cfg.epsilon = get_or(j, "epsilon", cfg.epsilon);
  cfg.beta = get_or(j, "beta", cfg.beta);

  io::Artifact a;
  a.name = "resource_table";
  Json parts = Json::array();
  for (Variant v : cfg.variants)
    for (std::size_t n : cfg.n_values) {
      ResourceQuery q{v, n, cfg.degree, cfg.split_level, cfg.epsilon, cfg.beta};
      const auto rows = resource_report(q);
      io::Artifact part = io::resource_artifact(q, rows);
      if (a.table.header.empty()) a.table.header = part.table.header;
      for (auto& r : part.table.rows) a.table.add(std::move(r));
      parts.push_back(Json::parse(part.sidecar));
    }
  Json side;
  side["experiment"] = a.name;
  std::vector<std::string> names;
  for (Variant v : cfg.variants) names.emplace_back(variant_name(v));
  side["config"] = {{"variants", names},       {"n_values", cfg.n_values}, {"degree", cfg.degree},
                    {"split_level", cfg.split_level}, {"epsilon", cfg.epsilon},   {"beta", cfg.beta}};
  side["seed"] = nullptr;
  side["tables"] = std::move(parts);
  a.sidecar = side.dump(2) + "\n";
  return a;
}

}  // namespace

std::pair<std::vector<double>, std::vector<double>> overlap_pair(std::size_t n, double overlap) {
  if (n < 2) throw ConfigError("overlap pair needs n >= 2");
  if (!(overlap > 0.0 && overlap < 1.0)) throw ConfigError("overlap must lie in (0, 1)");
  const double nn = static_cast<double>(n);
  const auto ov = [nn](double x) { return (2.0 * x + (nn - 2.0) * x * x) / (1.0 + (nn - 1.0) * x * x); };
  double lo = 0.0;
  double hi = 1.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (ov(mid) < overlap ? lo : hi) = mid;
  }
  const double x = 0.5 * (lo + hi);
  std::vector<double> a(n, x);
  std::vector<double> b(n, x);
  a[0] = 1.0;
  b[1] = 1.0;
  return {a, b};
}

std::vector<CompareInnerPoint> compare_inner(const CompareInnerConfig& cfg) {
  if (cfg.repeats < 2 || cfg.shots == 0) throw ConfigError("compare_inner needs >= 2 repeats and >= 1 shot");
  std::vector<CompareInnerPoint> points;
  const sim::RngStream root(cfg.seed);
  for (std::size_t pi = 0; pi < cfg.overlaps.size(); ++pi) {
    const auto [a, b] = overlap_pair(cfg.n, cfg.overlaps[pi]);
    const auto na = encoding::normalize_affine(a, 0.0);
    const auto nb = encoding::normalize_affine(b, 0.0);
    const inner::ShotSource swap(inner::build_overlap_circuit(na, nb, inner::Method::kSwap));
    const inner::ShotSource af(inner::build_overlap_circuit(na, nb, inner::Method::kAncillaFree));
    CompareInnerPoint p;
    p.overlap = cfg.overlaps[pi];
    p.swap.resize(cfg.repeats);
    p.ancilla_free.resize(cfg.repeats);
    std::vector<char> clamped(cfg.repeats, 0);
    const sim::RngStream point_rng = root.split(pi);
    parallel_for(cfg.repeats, [&](std::size_t r) {
      sim::RngStream rs = point_rng.split(2 * r);
      sim::RngStream ra = point_rng.split(2 * r + 1);
      const auto ts = inner::collect(swap, cfg.shots, rs);
      clamped[r] = inner::swap_statistic(ts) < 0.0;
      p.swap[r] = inner::overlap_swap_estimate(ts);
      p.ancilla_free[r] = inner::overlap_ancilla_free_estimate(inner::collect(af, cfg.shots, ra));
    });
    p.swap_clamped = static_cast<unsigned>(std::count(clamped.begin(), clamped.end(), 1));
    p.swap_mean = mean(p.swap);
    p.swap_variance = sample_variance(p.swap);
    p.ancilla_free_mean = mean(p.ancilla_free);
    p.ancilla_free_variance = sample_variance(p.ancilla_free);
    points.push_back(std::move(p));
  }
  return points;
}

std::vector<double> synthetic_series(std::size_t n, double lo, double hi, std::uint64_t seed, std::uint64_t stream) {
  sim::RngStream rng(seed, stream);
  std::vector<double> v(n);
  for (double& x : v) x = lo + (hi - lo) * rng.uniform();
  return v;
}

std::vector<ErrorScalingPoint> error_scaling_k(const ErrorScalingConfig& cfg) {
  if (cfg.runs == 0 || cfg.datasets == 0) throw ConfigError("error_scaling_k needs at least one run and dataset");
  std::vector<ErrorScalingPoint> points;
  const sim::RngStream root(cfg.seed, 1);
  for (std::size_t n : cfg.n_values) {
    std::vector<encoding::NormalizedSeries> ts;
    std::vector<encoding::NormalizedSeries> es;
    for (unsigned d = 0; d < cfg.datasets; ++d) {
      const std::uint64_t stream = 1000 * n + 2 * d;
      ts.push_back(encoding::normalize_affine(synthetic_series(n, cfg.t_lo, cfg.t_hi, cfg.seed, stream), 0.0));
      es.push_back(encoding::normalize_affine(synthetic_series(n, cfg.e_lo, cfg.e_hi, cfg.seed, stream + 1), 0.0));
    }
    for (unsigned k : cfg.k_values) {
      ErrorScalingPoint p;
      p.n = n;
      p.k = k;
      p.epsilon = cfg.scaled ? cfg.base_epsilon * std::pow(static_cast<double>(n), -0.5 * (k - 1.0))
                             : cfg.base_epsilon;
      p.exact.resize(cfg.datasets);
      p.estimates.assign(cfg.datasets, std::vector<double>(cfg.runs));
      std::vector<double> rel;
      std::vector<double> calls(cfg.runs * cfg.datasets);
      for (unsigned d = 0; d < cfg.datasets; ++d) {
        const qae::PowerQaeEstimator est(ts[d], es[d], k, cfg.ae.mode);
        p.exact[d] = est.exact_value();
        const sim::RngStream point_rng = root.split(1000000 * n + 1000 * k + d);
        parallel_for(cfg.runs, [&](std::size_t r) {
          sim::RngStream rng = point_rng.split(r);
          const auto res = est.estimate(p.epsilon, cfg.confidence, cfg.ae, rng);
          p.estimates[d][r] = res.value;
          calls[d * cfg.runs + r] = static_cast<double>(res.oracle_calls);
        });
        for (double v : p.estimates[d]) rel.push_back(std::abs(v - p.exact[d]) / p.exact[d]);
      }
      p.mean_relative_error = mean(rel);
      p.median_relative_error = qae::median(rel);
      p.mean_oracle_calls = mean(calls);
      points.push_back(std::move(p));
    }
  }
  return points;
}

std::vector<double> flatness_ratios(const std::vector<ErrorScalingPoint>& points, const std::vector<unsigned>& ks) {
  std::vector<double> out;
  for (unsigned k : ks) {
    double lo = INFINITY;
    double hi = 0.0;
    for (const auto& p : points)
      if (p.k == k) {
        lo = std::min(lo, p.median_relative_error);
        hi = std::max(hi, p.median_relative_error);
      }
    out.push_back(lo > 0.0 ? hi / lo : INFINITY);
  }
  return out;
}

double loglog_slope(const std::vector<double>& cost, const std::vector<double>& error) {
  std::vector<double> x;
  std::vector<double> y;
  for (std::size_t i = 0; i < cost.size(); ++i)
    if (cost[i] > 0.0 && error[i] > 0.0) {
      x.push_back(std::log(cost[i]));
      y.push_back(std::log(error[i]));
    }
  if (x.size() < 2) throw ConfigError("slope needs at least two points with positive cost and error");
  const double mx = mean(x);
  const double my = mean(y);
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  return sxy / sxx;
}

QaeVsClassicalResult qae_vs_classical(const QaeVsClassicalConfig& cfg) {
  if (cfg.repeats == 0) throw ConfigError("qae_vs_classical needs at least one repeat");
  std::vector<double> epsilons = cfg.qae_epsilons;
  if (epsilons.empty())
    for (int i = 0; i <= 8; ++i) epsilons.push_back(0.05 * std::ldexp(1.0, -i));
  std::vector<std::uint64_t> sizes = cfg.group_sizes;
  if (sizes.empty())
    for (int i = 0; i <= 9; ++i) sizes.push_back(std::uint64_t{16} << i);

  const auto t = encoding::normalize_affine(cfg.temps, 0.0);
  const auto e = encoding::normalize_affine(cfg.prices, 0.0);
  const classical::SampleAccess access(e.values);
  const sim::RngStream root(cfg.seed, 2);
  QaeVsClassicalResult res;
  for (unsigned k : cfg.k_values) {
    const auto oracle = qae::make_power_oracle(t, e, k, cfg.ae.mode);
    const double z = oracle.good_probability();
    std::vector<double> costs;
    std::vector<double> errors;
    for (std::size_t i = 0; i < epsilons.size(); ++i) {
      std::vector<double> err(cfg.repeats);
      std::vector<double> calls(cfg.repeats);
      const sim::RngStream point_rng = root.split(100 * k + i);
      parallel_for(cfg.repeats, [&](std::size_t r) {
        sim::RngStream rng = point_rng.split(r);
        const auto est = qae::estimate_probability(oracle, epsilons[i], cfg.confidence, cfg.ae, rng);
        err[r] = std::abs(est.z - z);
        calls[r] = static_cast<double>(est.oracle_calls);
      });
      res.points.push_back({"iqae", k, epsilons[i], mean(calls), mean(err), qae::median(err)});
      costs.push_back(mean(calls));
      errors.push_back(qae::median(err));
    }
    res.qae_slopes.push_back(loglog_slope(costs, errors));

    const std::vector<double> w = qhp::power_state(t.values, k);
    const double a_k = qhp::norm_constant(t.values, k);
    double y = 0.0;
    for (std::size_t j = 0; j < w.size(); ++j) y += e.values[j] * w[j];
    costs.clear();
    errors.clear();
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      std::vector<double> err(cfg.repeats);
      const sim::RngStream point_rng = root.split(100000 + 100 * k + i);
      parallel_for(cfg.repeats, [&](std::size_t r) {
        sim::RngStream rng = point_rng.split(r);
        const auto est = classical::sampled_inner_product(access, w, cfg.sampling_groups, sizes[i], rng);
        // Error on y_k, which is the sampled inner product over a_k.
        err[r] = std::abs(est.value - y) / a_k;
      });
      const double cost = static_cast<double>(cfg.sampling_groups * sizes[i]);
      res.points.push_back({"sampling", k, static_cast<double>(sizes[i]), cost, mean(err), qae::median(err)});
      costs.push_back(cost);
      errors.push_back(qae::median(err));
    }
    res.sampling_slopes.push_back(loglog_slope(costs, errors));
  }
  return res;
}

EndToEndResult end_to_end(const EndToEndConfig& cfg) {
  if (cfg.trials == 0) throw ConfigError("end_to_end needs at least one trial");
  EndToEndResult res;
  res.trials.resize(cfg.trials);
  std::vector<RunReport> reports(cfg.trials);
  parallel_for(cfg.trials, [&](std::size_t i) {
    VariantConfig v = cfg.variant;
    v.seed = cfg.variant.seed + i;
    reports[i] = evaluate(v, cfg.temps, cfg.prices);
  });
  res.poly_value = reports[0].poly_value;
  res.exact_value = reports[0].exact_value;
  double covered = 0.0;
  std::vector<double> rel;
  for (std::size_t i = 0; i < cfg.trials; ++i) {
    EndToEndTrial& t = res.trials[i];
    t.seed = cfg.variant.seed + i;
    t.value = reports[i].value;
    t.relative_error = reports[i].relative_error_vs_poly();
    t.within_epsilon = t.relative_error <= cfg.variant.epsilon;
    covered += t.within_epsilon ? 1.0 : 0.0;
    rel.push_back(t.relative_error);
  }
  res.mean_relative_error = mean(rel);
  res.coverage = covered / static_cast<double>(cfg.trials);
  return res;
}

io::Artifact run_experiment(std::string_view name, std::string_view config_json,
                            const std::filesystem::path& base_dir) {
  Json j;
  try {
    j = Json::parse(config_json.empty() ? std::string_view("{}") : config_json);
  } catch (const nlohmann::json::parse_error& e) {
    throw IoError(std::string("malformed experiment config: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("experiment config must be a JSON object");
  if (name == "compare_inner") return compare_inner_artifact(j);
  if (name == "error_scaling_k") return error_scaling_artifact(j);
  if (name == "qae_vs_classical") return qae_vs_classical_artifact(j);
  if (name == "end_to_end") return end_to_end_artifact(j, base_dir);
  if (name == "resource_table") return resource_table_artifact(j);
  throw ConfigError("unknown experiment '" + std::string(name) + "'");
}

}  // namespace qsim::assembly
