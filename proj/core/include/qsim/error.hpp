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

#ifndef QSIM_ERROR_HPP_
#define QSIM_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace qsim {

// Input data or parameters violate a precondition of the estimator (e.g.
// non-positive series after shifting, zero-probability postselection).
class AssumptionError : public std::invalid_argument {
 public:
  explicit AssumptionError(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed arguments that are not about the data itself.
class ConfigError : public std::invalid_argument {
 public:
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// A requested postselection branch carries (numerically) zero weight.
class ZeroBranchError : public AssumptionError {
 public:
  explicit ZeroBranchError(const std::string& what) : AssumptionError(what) {}
};

}  // namespace qsim

#endif  // QSIM_ERROR_HPP_
