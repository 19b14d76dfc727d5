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

#ifndef QSIM_IO_SERIES_IO_HPP_
#define QSIM_IO_SERIES_IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "qsim/encoding/encoding.hpp"

namespace qsim::io {

// A series file is either a JSON array of numbers (".json"), or text with one
// value per row. The first field of a row is used, a non-numeric first row is
// taken as a header, and blank lines and '#' comments are skipped.
std::vector<double> parse_series_csv(std::string_view text);
std::vector<double> parse_series_json(std::string_view text);
// Throws IoError when the file cannot be read or parsed.
std::vector<double> read_series(const std::filesystem::path& path);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, std::string_view text);

// {"depth", "leaves", "levels": [[norms per level]], "angles": [[...]]}
std::string tree_to_json(const encoding::StateTree& tree);

}  // namespace qsim::io

#endif  // QSIM_IO_SERIES_IO_HPP_
