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

#ifndef QSIM_IO_REPORT_IO_HPP_
#define QSIM_IO_REPORT_IO_HPP_

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "qsim/assembly/pipeline.hpp"
#include "qsim/assembly/resources.hpp"

namespace qsim::io {

// Shortest round-trip decimal form; "nan"/"inf" for non-finite values.
std::string format_number(double v);
std::string format_number(std::uint64_t v);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void add(std::vector<std::string> row);
  std::string to_csv() const;
};

// A CSV table plus its JSON sidecar, written as <name>.csv and <name>.json.
struct Artifact {
  std::string name;
  Table table;
  std::string sidecar;
};

void write_artifact(const std::filesystem::path& dir, const Artifact& artifact);

Artifact run_artifact(const assembly::RunReport& report);
Artifact resource_artifact(const assembly::ResourceQuery& query, std::span<const assembly::ResourceRow> rows);
Artifact margin_artifact(const assembly::MarginReport& report);

}  // namespace qsim::io

#endif  // QSIM_IO_REPORT_IO_HPP_
