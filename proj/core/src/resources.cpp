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

#include "qsim/assembly/resources.hpp"

#include <cmath>

#include "qsim/classical/classical.hpp"
#include "qsim/encoding/encoding.hpp"
#include "qsim/error.hpp"
#include "qsim/inner/inner_product.hpp"
#include "qsim/inner/shot_budget.hpp"
#include "qsim/qae/grover.hpp"

namespace qsim::assembly {
namespace {

unsigned ceil_log2(unsigned k) {
  unsigned r = 0;
  while ((1U << r) < k) ++r;
  return r;
}

// Gate structure does not depend on the data beyond zero angles, so a
// uniform series yields the generic circuit.
encoding::StateTree uniform_tree(std::size_t n, encoding::Normalization kind) {
  std::vector<double> raw(n, 1.0);
  return encoding::StateTree(encoding::normalize(raw, 0.0, kind).values);
}

unsigned flagged_controls(const inner::InnerCircuit& ic, bool with_result) {
  unsigned c = 0;
  for (const auto& r : ic.power.checks) c += static_cast<unsigned>(r.size());
  if (with_result) c += static_cast<unsigned>(ic.result.size());
  return c;
}

}  // namespace

std::vector<ResourceRow> resource_report(const ResourceQuery& q) {
  if (q.degree < 1) throw ConfigError("degree must be at least 1");
  if (!(q.epsilon > 0.0)) throw ConfigError("epsilon must be positive");
  if (!(q.beta > 0.0 && q.beta < 1.0)) throw ConfigError("beta must lie in (0, 1)");
  const unsigned lg = encoding::log2_exact(q.n);
  const double kk = static_cast<double>(q.degree);
  const double alpha = (kk - 1.0 + q.beta) / kk;

  std::vector<ResourceRow> rows;
  for (unsigned k = 1; k <= q.degree; ++k) {
    ResourceRow row;
    row.variant = q.variant;
    row.k = k;
    row.n = q.n;
    row.alpha = alpha;
    switch (q.variant) {
      case Variant::kA:
      case Variant::kB: {
        const bool mid = q.variant == Variant::kA;
        const auto loader = encoding::load_amplitude(uniform_tree(q.n, encoding::Normalization::kAffine));
        const auto pc = qhp::build_power_circuit(loader, k, mid ? qhp::Style::kMidReset : qhp::Style::kNoMidReset);
        const auto ic = inner::build_inner_circuit(pc, loader, inner::Method::kAncillaFree);
        row.width = mid ? 2 * lg : k * lg;
        row.width_built = ic.circuit.width();
        row.depth_built = ic.circuit.depth();
        // Mid-circuit: k + 1 loads and k CNOT layers in the worst case;
        // parallel: two loads and ceil(lg k) CNOT rounds.
        const int ki = static_cast<int>(k);
        row.depth_bound = mid ? sim::Cost{ki + 1, ki} : sim::Cost{2, static_cast<int>(ceil_log2(k))};
        row.loader_depth = static_cast<unsigned>(loader.forward.depth().layers);
        row.cost = inner::shots_power_ancilla_free(q.epsilon, alpha);
        row.cost_kind = "shots";
        row.cost_order = "O(log(1/(1-alpha)) / eps^2)";
        break;
      }
      case Variant::kC: {
        const auto loader = encoding::load_amplitude(uniform_tree(q.n, encoding::Normalization::kAffine));
        const auto pc = qhp::build_power_circuit(loader, k, qhp::Style::kNoMidReset);
        const auto ic = inner::build_inner_circuit(pc, loader, inner::Method::kAncillaFree);
        row.width = k * lg + 1;
        row.width_built = ic.circuit.width() + 1;
        row.mcx_ancillas = qae::mcx_resources(flagged_controls(ic, true)).ancillas;
        row.depth_built = ic.circuit.depth() + sim::Cost{0, 1};
        row.loader_depth = static_cast<unsigned>(loader.forward.depth().layers);
        row.cost_kind = "oracle_calls";
        row.cost_order = "O(log(1/(1-alpha)) / eps)";
        break;
      }
      case Variant::kD: {
        row.split_level = q.split_level;
        const auto loader = encoding::load_boe(uniform_tree(q.n, encoding::Normalization::kSqrt), q.split_level);
        const auto pc = qhp::build_power_circuit(loader, k, qhp::Style::kNoMidReset);
        const auto ic = inner::build_inner_circuit(pc, loader, inner::Method::kSwap);
        row.width = (k + 1) * encoding::boe_width(q.n, q.split_level) + 1;
        row.width_built = ic.circuit.width() + 1;
        row.mcx_ancillas = qae::mcx_resources(flagged_controls(ic, true)).ancillas;
        row.depth_built = ic.circuit.depth() + sim::Cost{0, 1};
        row.loader_depth = encoding::boe_depth(q.n, q.split_level);
        row.cost_kind = "oracle_calls";
        row.cost_order = "O(log(1/(1-alpha)) / eps)";
        break;
      }
      case Variant::kSampling:
        row.cost = static_cast<std::uint64_t>(classical::sampling_groups(alpha)) *
                   classical::sampling_group_size(q.epsilon);
        row.cost_kind = "samples";
        row.cost_order = "O(log(1/(1-alpha)) / eps^2)";
        break;
      case Variant::kExact:
      case Variant::kPoly:
        row.cost = q.n;
        row.cost_kind = "arithmetic";
        row.cost_order = "O(N)";
        break;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace qsim::assembly
