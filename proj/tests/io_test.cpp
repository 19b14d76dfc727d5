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

#include <filesystem>
#include <json.hpp>

#include "qsim/assembly/pipeline.hpp"
#include "qsim/encoding/encoding.hpp"
#include "qsim/error.hpp"
#include "qsim/io/report_io.hpp"
#include "qsim/io/series_io.hpp"

namespace qsim::io {
namespace {

namespace fs = std::filesystem;

fs::path scratch_dir(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("qsim_io_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

TEST(SeriesCsv, HeaderCommentsAndExtraColumns) {
  const auto v = parse_series_csv("temperature,station\n# comment\n1.5,a\n\n  2.25 \n-3e-1\n");
  EXPECT_EQ(v, (std::vector<double>{1.5, 2.25, -0.3}));
}

TEST(SeriesCsv, Errors) {
  EXPECT_THROW(parse_series_csv("1.0\nabc\n"), IoError);
  EXPECT_THROW(parse_series_csv("header\n"), IoError);
}

TEST(SeriesJson, ArrayAndObject) {
  EXPECT_EQ(parse_series_json("[1, 2.5, 3]"), (std::vector<double>{1, 2.5, 3}));
  EXPECT_EQ(parse_series_json(R"({"values": [4, 5]})"), (std::vector<double>{4, 5}));
  EXPECT_THROW(parse_series_json("[1, \"x\"]"), IoError);
  EXPECT_THROW(parse_series_json("[1,"), IoError);
}

TEST(SeriesFiles, ReadByExtension) {
  const auto dir = scratch_dir("series");
  write_text(dir / "t.csv", "1\n2\n");
  write_text(dir / "t.json", "[3, 4]");
  EXPECT_EQ(read_series(dir / "t.csv"), (std::vector<double>{1, 2}));
  EXPECT_EQ(read_series(dir / "t.json"), (std::vector<double>{3, 4}));
  EXPECT_THROW(read_series(dir / "missing.csv"), IoError);
}

TEST(FormatNumber, ShortestRoundTrip) {
  EXPECT_EQ(format_number(0.1), "0.1");
  EXPECT_EQ(format_number(1e-20), "1e-20");
  EXPECT_EQ(format_number(std::uint64_t{36014}), "36014");
  EXPECT_EQ(format_number(std::numeric_limits<double>::quiet_NaN()), "nan");
  const double x = 0.1 + 0.2;
  EXPECT_EQ(std::stod(format_number(x)), x);
}

TEST(Table, Csv) {
  Table t{{"a", "b"}, {}};
  t.add({"1", "2"});
  EXPECT_EQ(t.to_csv(), "a,b\n1,2\n");
}

TEST(Artifacts, RunArtifactIsDeterministic) {
  assembly::VariantConfig cfg;
  cfg.variant = assembly::Variant::kB;
  cfg.seed = 5;
  const std::vector<double> t{1.4, 2.6, 1.9, 2.2};
  const std::vector<double> e{2.1, 1.3, 2.8, 1.7};
  const auto a = run_artifact(assembly::evaluate(cfg, t, e));
  const auto b = run_artifact(assembly::evaluate(cfg, t, e));
  EXPECT_EQ(a.table.to_csv(), b.table.to_csv());
  EXPECT_EQ(a.sidecar, b.sidecar);
  const auto j = nlohmann::json::parse(a.sidecar);
  EXPECT_EQ(j["seed"], 5);
  EXPECT_EQ(j["per_k"].size(), 4u);
  EXPECT_EQ(a.table.header.front(), "k");

  const auto dir = scratch_dir("artifact");
  write_artifact(dir / "nested", a);
  EXPECT_EQ(read_text(dir / "nested" / "evaluate.csv"), a.table.to_csv());
  EXPECT_EQ(read_text(dir / "nested" / "evaluate.json"), a.sidecar);
}

TEST(TreeJson, Structure) {
  const std::vector<double> v{0.5, 0.5, 0.5, 0.5};
  const auto j = nlohmann::json::parse(tree_to_json(encoding::StateTree(v)));
  EXPECT_EQ(j["depth"], 2);
  EXPECT_EQ(j["levels"].size(), 3u);
  EXPECT_EQ(j["angles"].size(), 2u);
  EXPECT_NEAR(j["levels"][0][0].get<double>(), 1.0, 1e-15);
}

}  // namespace
}  // namespace qsim::io
