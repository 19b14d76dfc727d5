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

#ifndef QSIM_ASSEMBLY_RESOURCES_HPP_
#define QSIM_ASSEMBLY_RESOURCES_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qsim/assembly/pipeline.hpp"
#include "qsim/sim/circuit.hpp"

namespace qsim::assembly {

struct ResourceQuery {
  Variant variant = Variant::kB;
  std::size_t n = 4;
  unsigned degree = 3;
  unsigned split_level = 1;
  double epsilon = 0.01;  // per-term accuracy
  double beta = 0.9;
};

// One row per power k = 1..K. Closed forms sit next to counts taken from
// circuits that are built (never simulated) at the requested size.
struct ResourceRow {
  Variant variant = Variant::kB;
  unsigned k = 0;
  std::size_t n = 0;
  unsigned split_level = 0;
  unsigned width = 0;            // closed form
  unsigned width_built = 0;      // built circuit (flag qubit included for c, d)
  unsigned mcx_ancillas = 0;     // extra qubits of a V-chain multi-controlled X
  sim::Cost depth_built;         // (sequential loads, other layers)
  std::optional<sim::Cost> depth_bound;
  unsigned loader_depth = 0;     // elementary layers of one loader instance
  double alpha = 0.0;
  std::uint64_t cost = 0;        // shots, oracle calls or samples; 0 when only an order is known
  std::string cost_kind;
  std::string cost_order;
};

std::vector<ResourceRow> resource_report(const ResourceQuery& query);

}  // namespace qsim::assembly

#endif  // QSIM_ASSEMBLY_RESOURCES_HPP_
