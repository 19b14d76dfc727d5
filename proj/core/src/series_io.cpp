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

#include "qsim/io/series_io.hpp"

#include <charconv>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "qsim/error.hpp"

namespace qsim::io {
namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool parse_double(std::string_view s, double& out) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

std::vector<double> parse_series_csv(std::string_view text) {
  std::vector<double> out;
  std::size_t line_no = 0;
  bool first_data_row = true;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    const std::string_view field = trim(line.substr(0, line.find_first_of(",;\t")));
    double v = 0.0;
    if (!parse_double(field, v)) {
      if (first_data_row) {
        first_data_row = false;
        continue;
      }
      throw IoError("series row " + std::to_string(line_no) + " is not a number: '" + std::string(field) + "'");
    }
    first_data_row = false;
    out.push_back(v);
  }
  if (out.empty()) throw IoError("series file holds no values");
  return out;
}

std::vector<double> parse_series_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw IoError(std::string("malformed JSON series: ") + e.what());
  }
  if (doc.is_object() && doc.contains("values")) doc = doc["values"];
  if (!doc.is_array()) throw IoError("JSON series must be an array of numbers");
  std::vector<double> out;
  for (const auto& v : doc) {
    if (!v.is_number()) throw IoError("JSON series must be an array of numbers");
    out.push_back(v.get<double>());
  }
  if (out.empty()) throw IoError("series file holds no values");
  return out;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("failed reading '" + path.string() + "'");
  return ss.str();
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

std::vector<double> read_series(const std::filesystem::path& path) {
  const std::string text = read_text(path);
  if (path.extension() == ".json") return parse_series_json(text);
  return parse_series_csv(text);
}

std::string tree_to_json(const encoding::StateTree& tree) {
  nlohmann::ordered_json doc;
  doc["depth"] = tree.depth();
  doc["leaves"] = tree.leaf_count();
  auto& levels = doc["levels"] = nlohmann::ordered_json::array();
  auto& angles = doc["angles"] = nlohmann::ordered_json::array();
  for (unsigned l = 0; l <= tree.depth(); ++l) {
    const auto lv = tree.level(l);
    levels.push_back(std::vector<double>(lv.begin(), lv.end()));
    if (l < tree.depth()) {
      std::vector<double> a(lv.size());
      for (std::size_t i = 0; i < lv.size(); ++i) a[i] = tree.angle(l, i);
      angles.push_back(a);
    }
  }
  return doc.dump(2) + "\n";
}

}  // namespace qsim::io
