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

#include "qsim/io/report_io.hpp"

#include <charconv>
#include <cmath>
#include <json.hpp>

#include "qsim/error.hpp"
#include "qsim/io/series_io.hpp"

namespace qsim::io {
namespace {

using Json = nlohmann::ordered_json;

std::string_view fit_mode_name(classical::FitMode m) {
  return m == classical::FitMode::kTaylor ? "taylor" : "lsq";
}

Json number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

std::string_view engine_name(qae::Engine e) { return e == qae::Engine::kIterative ? "iterative" : "canonical"; }

Json config_json(const assembly::VariantConfig& c) {
  Json j;
  j["variant"] = assembly::variant_name(c.variant);
  j["degree"] = c.degree;
  j["eta"] = c.eta;
  j["epsilon"] = c.epsilon;
  j["beta"] = c.beta;
  j["split_level"] = c.split_level;
  j["seed"] = c.seed;
  j["sigmoid"] = {{"a", c.sigmoid.a}, {"b", c.sigmoid.b}, {"c", c.sigmoid.c}, {"d", c.sigmoid.d}, {"t0", c.sigmoid.t0}};
  j["fit_mode"] = fit_mode_name(c.fit_mode);
  j["domain"] = {c.domain.lo, c.domain.hi};
  j["coefficients"] = c.coefficients ? Json(*c.coefficients) : Json(nullptr);
  j["forced_epsilon"] = c.forced_epsilon ? Json(*c.forced_epsilon) : Json(nullptr);
  j["engine"] = engine_name(c.ae.engine);
  j["shots_per_round"] = c.ae.shots_per_round;
  j["eval_qubits"] = c.ae.eval_qubits;
  return j;
}

Json run_json(const assembly::RunReport& r) {
  Json j;
  j["config"] = config_json(r.config);
  j["seed"] = r.config.seed;
  j["n"] = r.n;
  j["coefficients"] = r.coefficients;
  j["rho_t"] = r.rho_t;
  j["rho_e"] = r.rho_e;
  j["value"] = number(r.value);
  j["exact_value"] = number(r.exact_value);
  j["poly_value"] = number(r.poly_value);
  j["relative_error_vs_poly"] = number(r.relative_error_vs_poly());
  j["relative_error_vs_exact"] = number(r.relative_error_vs_exact());
  j["total_shots"] = r.total_shots();
  j["total_oracle_calls"] = r.total_oracle_calls();
  j["total_samples"] = r.total_samples();
  Json per_k = Json::array();
  for (const auto& t : r.terms) {
    Json e;
    e["k"] = t.k;
    e["coefficient"] = t.coefficient;
    e["method"] = t.method;
    e["skipped"] = t.skipped;
    e["epsilon"] = t.epsilon;
    e["alpha"] = t.alpha;
    e["estimate"] = number(t.estimate);
    e["rescaled"] = number(t.rescaled);
    e["exact_rescaled"] = number(t.exact_rescaled);
    e["shots"] = t.shots;
    e["oracle_calls"] = t.oracle_calls;
    e["samples"] = t.samples;
    e["width"] = t.width;
    e["depth_loads"] = t.depth.loads;
    e["depth_layers"] = t.depth.layers;
    e["clamped"] = t.clamped;
    per_k.push_back(std::move(e));
  }
  j["per_k"] = std::move(per_k);
  return j;
}

}  // namespace

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string format_number(std::uint64_t v) { return std::to_string(v); }

void Table::add(std::vector<std::string> row) {
  if (row.size() != header.size()) throw ConfigError("table row width differs from header");
  rows.push_back(std::move(row));
}

std::string Table::to_csv() const {
  std::string out;
  const auto emit = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) out += ',';
      out += cells[i];
    }
    out += '\n';
  };
  emit(header);
  for (const auto& r : rows) emit(r);
  return out;
}

void write_artifact(const std::filesystem::path& dir, const Artifact& artifact) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory '" + dir.string() + "': " + ec.message());
  write_text(dir / (artifact.name + ".csv"), artifact.table.to_csv());
  write_text(dir / (artifact.name + ".json"), artifact.sidecar);
}

Artifact run_artifact(const assembly::RunReport& r) {
  Artifact a;
  a.name = "evaluate";
  a.table.header = {"k",        "coefficient",    "method", "epsilon", "alpha",        "estimate",
                    "rescaled", "exact_rescaled", "shots",  "oracle_calls", "samples", "width"};
  for (const auto& t : r.terms)
    a.table.add({std::to_string(t.k), format_number(t.coefficient), t.method, format_number(t.epsilon),
                 format_number(t.alpha), format_number(t.estimate), format_number(t.rescaled),
                 format_number(t.exact_rescaled), format_number(t.shots), format_number(t.oracle_calls),
                 format_number(t.samples), std::to_string(t.width)});
  a.sidecar = run_json(r).dump(2) + "\n";
  return a;
}

Artifact resource_artifact(const assembly::ResourceQuery& q, std::span<const assembly::ResourceRow> rows) {
  Artifact a;
  a.name = "resources";
  a.table.header = {"variant",     "n",           "k",           "split_level",       "width",
                    "width_built", "mcx_ancillas", "depth_loads", "depth_layers",      "depth_loads_bound",
                    "depth_layers_bound", "loader_depth", "alpha", "cost", "cost_kind", "cost_order"};
  Json list = Json::array();
  for (const auto& r : rows) {
    const std::string lb = r.depth_bound ? std::to_string(r.depth_bound->loads) : "";
    const std::string yb = r.depth_bound ? std::to_string(r.depth_bound->layers) : "";
    a.table.add({std::string(assembly::variant_name(r.variant)), std::to_string(r.n), std::to_string(r.k),
                 std::to_string(r.split_level), std::to_string(r.width), std::to_string(r.width_built),
                 std::to_string(r.mcx_ancillas), std::to_string(r.depth_built.loads),
                 std::to_string(r.depth_built.layers), lb, yb, std::to_string(r.loader_depth),
                 format_number(r.alpha), format_number(r.cost), r.cost_kind, "\"" + r.cost_order + "\""});
    Json e;
    e["k"] = r.k;
    e["width"] = r.width;
    e["width_built"] = r.width_built;
    e["mcx_ancillas"] = r.mcx_ancillas;
    e["depth_built"] = {r.depth_built.loads, r.depth_built.layers};
    e["depth_bound"] = r.depth_bound ? Json({r.depth_bound->loads, r.depth_bound->layers}) : Json(nullptr);
    e["loader_depth"] = r.loader_depth;
    e["cost"] = r.cost;
    e["cost_kind"] = r.cost_kind;
    e["cost_order"] = r.cost_order;
    list.push_back(std::move(e));
  }
  Json j;
  j["variant"] = assembly::variant_name(q.variant);
  j["n"] = q.n;
  j["degree"] = q.degree;
  j["split_level"] = q.split_level;
  j["epsilon"] = q.epsilon;
  j["beta"] = q.beta;
  j["rows"] = std::move(list);
  a.sidecar = j.dump(2) + "\n";
  return a;
}

Artifact margin_artifact(const assembly::MarginReport& m) {
  Artifact a;
  a.name = "margin";
  a.table.header = {"part", "value", "exact_value", "relative_error_vs_exact"};
  const std::pair<const char*, const assembly::RunReport*> parts[] = {{"actual_fixed", &m.actual_fixed},
                                                                      {"actual_market", &m.actual_market},
                                                                      {"normal_fixed", &m.normal_fixed},
                                                                      {"normal_market", &m.normal_market}};
  Json j;
  j["delta_gross_margin"] = number(m.value);
  double exact = 0.0;
  for (const auto& [name, rep] : parts) {
    a.table.add({name, format_number(rep->value), format_number(rep->exact_value),
                 format_number(rep->relative_error_vs_exact())});
    j[name] = run_json(*rep);
  }
  exact = (m.actual_fixed.exact_value - m.actual_market.exact_value) -
          (m.normal_fixed.exact_value - m.normal_market.exact_value);
  a.table.add({"delta_gross_margin", format_number(m.value), format_number(exact),
               format_number(std::abs(m.value - exact) / std::abs(exact))});
  j["delta_gross_margin_exact"] = number(exact);
  a.sidecar = j.dump(2) + "\n";
  return a;
}

}  // namespace qsim::io
