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

// qsim command-line driver.
//
// Exit status: 0 success, 2 invalid input or violated assumption, 3 I/O
// failure, 1 anything else.

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qsim/assembly/experiments.hpp"
#include "qsim/assembly/pipeline.hpp"
#include "qsim/assembly/resources.hpp"
#include "qsim/classical/classical.hpp"
#include "qsim/encoding/encoding.hpp"
#include "qsim/error.hpp"
#include "qsim/io/report_io.hpp"
#include "qsim/io/series_io.hpp"

namespace {

namespace fs = std::filesystem;
using namespace qsim;

constexpr int kExitInput = 2;
constexpr int kExitIo = 3;

std::vector<double> parse_list(const std::string& text, std::size_t expected, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ConfigError(std::string("cannot parse ") + what + " entry '" + item + "'");
    }
  }
  if (expected != 0 && out.size() != expected)
    throw ConfigError(std::string(what) + " needs " + std::to_string(expected) + " comma-separated values");
  return out;
}

classical::SigmoidParams parse_params(const std::string& text) {
  const auto p = parse_list(text, 5, "--params");
  return {p[0], p[1], p[2], p[3], p[4]};
}

classical::Domain parse_domain(const std::string& text) {
  const auto d = parse_list(text, 2, "--domain");
  return {d[0], d[1]};
}

classical::FitMode parse_mode(const std::string& mode) {
  if (mode == "taylor") return classical::FitMode::kTaylor;
  if (mode == "lsq") return classical::FitMode::kLeastSquares;
  throw ConfigError("--mode must be taylor or lsq");
}

struct EvaluateArgs {
  std::string variant;
  std::string input_t;
  std::string input_e;
  std::string input_tau;
  unsigned degree = 3;
  double eta = 0.0;
  double epsilon = 0.1;
  double beta = 0.9;
  unsigned split_level = 1;
  std::uint64_t seed = 0;
  std::string out = ".";
  std::string params;
  std::string mode = "taylor";
  std::string domain;
  std::string coefficients;
  double forced_epsilon = 0.0;
  std::string engine = "iterative";
  std::uint64_t shots_per_round = 100;
  double asp = 0.0;
};

void add_variant_options(CLI::App* cmd, EvaluateArgs& a) {
  cmd->add_option("--variant", a.variant, "a | b | c | d | exact | poly | sampling")->required();
  cmd->add_option("--input-t", a.input_t, "temperature series (CSV or JSON)")->required();
  cmd->add_option("--input-e", a.input_e, "price series (CSV or JSON)")->required();
  cmd->add_option("--degree", a.degree, "polynomial degree K");
  cmd->add_option("--eta", a.eta, "expansion point / temperature shift");
  cmd->add_option("--epsilon", a.epsilon, "target relative error");
  cmd->add_option("--beta", a.beta, "overall confidence");
  cmd->add_option("--split-level", a.split_level, "bidirectional split level (variant d)");
  cmd->add_option("--seed", a.seed, "random seed");
  cmd->add_option("--out", a.out, "output directory");
  cmd->add_option("--params", a.params, "sigmoid parameters A,B,C,D,T0");
  cmd->add_option("--mode", a.mode, "fit mode: taylor | lsq");
  cmd->add_option("--domain", a.domain, "fit domain LO,HI");
  cmd->add_option("--coefficients", a.coefficients, "explicit polynomial b0,b1,... in (t - eta)");
  cmd->add_option("--forced-epsilon", a.forced_epsilon, "override every per-term accuracy");
  cmd->add_option("--engine", a.engine, "amplitude estimation engine: iterative | canonical");
  cmd->add_option("--shots-per-round", a.shots_per_round, "iterative engine shots per round");
}

assembly::VariantConfig build_config(const EvaluateArgs& a) {
  assembly::VariantConfig c;
  c.variant = assembly::parse_variant(a.variant);
  c.degree = a.degree;
  c.eta = a.eta;
  c.epsilon = a.epsilon;
  c.beta = a.beta;
  c.split_level = a.split_level;
  c.seed = a.seed;
  if (!a.params.empty()) c.sigmoid = parse_params(a.params);
  c.fit_mode = parse_mode(a.mode);
  if (!a.domain.empty()) c.domain = parse_domain(a.domain);
  if (!a.coefficients.empty()) c.coefficients = parse_list(a.coefficients, 0, "--coefficients");
  if (a.forced_epsilon > 0.0) c.forced_epsilon = a.forced_epsilon;
  if (a.engine == "iterative") {
    c.ae.engine = qae::Engine::kIterative;
  } else if (a.engine == "canonical") {
    c.ae.engine = qae::Engine::kCanonical;
  } else {
    throw ConfigError("--engine must be iterative or canonical");
  }
  c.ae.shots_per_round = a.shots_per_round;
  return c;
}

int run_evaluate(const EvaluateArgs& a) {
  const auto cfg = build_config(a);
  const auto t = io::read_series(a.input_t);
  const auto e = io::read_series(a.input_e);
  const auto report = assembly::evaluate(cfg, t, e);
  io::write_artifact(a.out, io::run_artifact(report));
  std::printf("value %s\nexact %s\npoly %s\nrelative_error_vs_exact %s\n", io::format_number(report.value).c_str(),
              io::format_number(report.exact_value).c_str(), io::format_number(report.poly_value).c_str(),
              io::format_number(report.relative_error_vs_exact()).c_str());
  return 0;
}

int run_margin(const EvaluateArgs& a) {
  const auto cfg = build_config(a);
  assembly::ContractSpec contract;
  contract.sigmoid = cfg.sigmoid;
  contract.asp = a.asp;
  contract.season_normal = io::read_series(a.input_tau);
  const auto t = io::read_series(a.input_t);
  const auto e = io::read_series(a.input_e);
  const auto m = assembly::delta_gross_margin(cfg, t, contract, e);
  io::write_artifact(a.out, io::margin_artifact(m));
  std::printf("delta_gross_margin %s\n", io::format_number(m.value).c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qsim: bilinear risk evaluation by simulated quantum estimators"};
  app.require_subcommand(1);

  EvaluateArgs eval;
  auto* evaluate = app.add_subcommand("evaluate", "estimate sum_j f(T_j) E_j with one variant");
  add_variant_options(evaluate, eval);

  EvaluateArgs margin;
  auto* margin_cmd = app.add_subcommand("margin", "change of gross margin against a season-normal series");
  add_variant_options(margin_cmd, margin);
  margin_cmd->add_option("--input-tau", margin.input_tau, "season-normal temperature series")->required();
  margin_cmd->add_option("--asp", margin.asp, "agreed sales price")->required();

  std::string exp_name;
  std::string exp_config;
  std::string exp_out = ".";
  auto* experiment = app.add_subcommand("experiment", "run a named experiment");
  experiment->add_option("name", exp_name, "compare_inner | error_scaling_k | qae_vs_classical | end_to_end | resource_table")
      ->required();
  experiment->add_option("--config", exp_config, "JSON configuration file")->required();
  experiment->add_option("--out", exp_out, "output directory");

  std::string res_variant;
  std::size_t res_n = 4;
  unsigned res_degree = 3;
  unsigned res_split = 1;
  double res_epsilon = 0.01;
  double res_beta = 0.9;
  std::string res_out;
  auto* resources = app.add_subcommand("resources", "width, depth and cost per power k");
  resources->add_option("--variant", res_variant)->required();
  resources->add_option("--n", res_n, "series length (power of two)")->required();
  resources->add_option("--degree", res_degree)->required();
  resources->add_option("--split-level", res_split);
  resources->add_option("--epsilon", res_epsilon, "per-term accuracy")->required();
  resources->add_option("--beta", res_beta);
  resources->add_option("--out", res_out, "also write resources.csv/json here");

  std::string fit_params;
  std::string fit_mode = "taylor";
  unsigned fit_degree = 3;
  double fit_eta = 0.0;
  std::string fit_domain;
  auto* fit = app.add_subcommand("fit", "polynomial coefficients of the sigmoid volume curve");
  fit->add_option("--params", fit_params, "A,B,C,D,T0")->required();
  fit->add_option("--mode", fit_mode, "taylor | lsq")->required();
  fit->add_option("--degree", fit_degree)->required();
  fit->add_option("--eta", fit_eta)->required();
  fit->add_option("--domain", fit_domain, "LO,HI");

  std::string tree_input;
  std::string tree_kind = "affine";
  double tree_eta = 0.0;
  std::string tree_out;
  auto* tree = app.add_subcommand("tree", "export the state-preparation tree of a series as JSON");
  tree->add_option("--input", tree_input)->required();
  tree->add_option("--kind", tree_kind, "affine | sqrt");
  tree->add_option("--eta", tree_eta);
  tree->add_option("--out", tree_out, "output file (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*evaluate) return run_evaluate(eval);
    if (*margin_cmd) return run_margin(margin);
    if (*experiment) {
      const fs::path cfg_path(exp_config);
      const std::string text = io::read_text(cfg_path);
      const auto artifact = assembly::run_experiment(exp_name, text, cfg_path.parent_path());
      io::write_artifact(exp_out, artifact);
      std::printf("wrote %s.csv and %s.json\n", artifact.name.c_str(), artifact.name.c_str());
      return 0;
    }
    if (*resources) {
      const assembly::ResourceQuery q{assembly::parse_variant(res_variant), res_n, res_degree, res_split,
                                      res_epsilon, res_beta};
      const auto rows = assembly::resource_report(q);
      const auto artifact = io::resource_artifact(q, rows);
      std::fputs(artifact.table.to_csv().c_str(), stdout);
      if (!res_out.empty()) io::write_artifact(res_out, artifact);
      return 0;
    }
    if (*fit) {
      const auto params = parse_params(fit_params);
      const auto domain = fit_domain.empty() ? classical::Domain{} : parse_domain(fit_domain);
      const auto poly = classical::fit(params, parse_mode(fit_mode), fit_degree, fit_eta, domain);
      std::puts("k,coefficient");
      for (std::size_t k = 0; k < poly.coefficients.size(); ++k)
        std::printf("%zu,%s\n", k, io::format_number(poly.coefficients[k]).c_str());
      return 0;
    }
    if (*tree) {
      const auto raw = io::read_series(tree_input);
      encoding::Normalization kind;
      if (tree_kind == "affine") {
        kind = encoding::Normalization::kAffine;
      } else if (tree_kind == "sqrt") {
        kind = encoding::Normalization::kSqrt;
      } else {
        throw ConfigError("--kind must be affine or sqrt");
      }
      const auto json = io::tree_to_json(encoding::StateTree(encoding::normalize(raw, tree_eta, kind).values));
      if (tree_out.empty()) {
        std::fputs(json.c_str(), stdout);
      } else {
        io::write_text(tree_out, json);
      }
      return 0;
    }
  } catch (const IoError& e) {
    std::cerr << "qsim: I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    // AssumptionError and ConfigError.
    std::cerr << "qsim: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "qsim: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
