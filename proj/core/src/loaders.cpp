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

#include <string>

#include "qsim/encoding/encoding.hpp"
#include "qsim/error.hpp"

namespace qsim::encoding {
namespace {

using sim::Control;
using sim::Register;

// Top-down uniformly controlled Ry cascade for the subtree rooted at
// (root_level, root_index), written onto `reg` (LSB first, MSB = root split).
void emit_subtree(sim::Circuit& c, const StateTree& tree, unsigned root_level, std::size_t root_index,
                  const Register& reg) {
  const unsigned height = static_cast<unsigned>(reg.size());
  for (unsigned t = 0; t < height; ++t) {
    const unsigned target = reg[height - 1 - t];
    for (std::size_t i = 0; i < (std::size_t{1} << t); ++i) {
      const double theta = tree.angle(root_level + t, (root_index << t) + i);
      if (theta == 0.0) continue;
      std::vector<Control> controls;
      controls.reserve(t);
      for (unsigned u = 0; u < t; ++u) controls.push_back({reg[height - 1 - u], ((i >> (t - 1 - u)) & 1U) != 0});
      c.gate(target, sim::gates::ry(theta), std::move(controls));
    }
  }
}

}  // namespace

Loader load_amplitude(const StateTree& tree) {
  const unsigned n = tree.depth();
  Loader loader;
  loader.kind = LoaderKind::kAmplitude;
  loader.forward = sim::Circuit(n);
  loader.primary = {0, n};
  loader.split_level = n;
  emit_subtree(loader.forward, tree, 0, 0, sim::QubitRange{0, n}.qubits());
  return loader;
}

unsigned boe_width(std::size_t n, unsigned split_level) {
  const unsigned lg = log2_exact(n);
  if (split_level < 1 || split_level > lg)
    throw AssumptionError("split level must lie in [1, lg N]; got " + std::to_string(split_level));
  return static_cast<unsigned>((split_level + 1) * (n >> split_level)) - 1 + lg;
}

unsigned boe_depth(std::size_t n, unsigned split_level) {
  const unsigned lg = log2_exact(n);
  boe_width(n, split_level);
  const unsigned s = split_level;
  return (1U << s) + (lg * lg - lg - s * s + s) / 2 + 1;
}

BoeLayout boe_layout(std::size_t n, unsigned split_level) {
  BoeLayout layout;
  layout.data_qubits = log2_exact(n);
  layout.split_level = split_level;
  layout.width = boe_width(n, split_level);
  const unsigned lg = layout.data_qubits;
  const unsigned tree_width = layout.width - lg;
  layout.primary = {0, lg};
  layout.aux = {lg, tree_width - lg};
  layout.copy = {tree_width, lg};
  return layout;
}

Loader load_boe(const StateTree& tree, unsigned split_level) {
  const std::size_t n = tree.leaf_count();
  const BoeLayout layout = boe_layout(n, split_level);
  const unsigned lg = layout.data_qubits;
  const unsigned s = split_level;
  const unsigned top = lg - s;  // levels handled by controlled swaps

  // Qubit assignment. The primary register gathers the leftmost bottom
  // subtree (low bits) and the left spine of the top levels (high bits).
  std::vector<std::vector<unsigned>> node_qubit(top);
  std::vector<Register> subtree_reg(std::size_t{1} << top);
  unsigned next = lg;
  for (unsigned l = 0; l < top; ++l) {
    node_qubit[l].resize(std::size_t{1} << l);
    node_qubit[l][0] = s + (top - 1 - l);
  }
  subtree_reg[0] = sim::QubitRange{0, s}.qubits();
  for (unsigned l = 0; l < top; ++l)
    for (std::size_t i = 1; i < node_qubit[l].size(); ++i) node_qubit[l][i] = next++;
  for (std::size_t b = 1; b < subtree_reg.size(); ++b) {
    subtree_reg[b] = sim::QubitRange{next, s}.qubits();
    next += s;
  }
  if (next != layout.copy.start) throw ConfigError("internal: bidirectional layout mismatch");

  Loader loader;
  loader.kind = LoaderKind::kBidirectional;
  loader.forward = sim::Circuit(layout.width);
  loader.primary = layout.primary;
  loader.split_level = s;
  sim::Circuit& c = loader.forward;

  for (unsigned l = 0; l < top; ++l)
    for (std::size_t i = 0; i < node_qubit[l].size(); ++i) {
      const double theta = tree.angle(l, i);
      if (theta != 0.0) c.gate(node_qubit[l][i], sim::gates::ry(theta));
    }
  for (std::size_t b = 0; b < subtree_reg.size(); ++b) emit_subtree(c, tree, top, b, subtree_reg[b]);

  // Merge bottom-up: the output register of node (l, i) is the output of its
  // left child with the node qubit appended as the new most significant bit.
  std::vector<Register> output = subtree_reg;
  for (unsigned l = top; l-- > 0;) {
    std::vector<Register> merged(std::size_t{1} << l);
    for (std::size_t i = 0; i < merged.size(); ++i) {
      c.cswap(node_qubit[l][i], output[2 * i], output[2 * i + 1]);
      merged[i] = output[2 * i];
      merged[i].push_back(node_qubit[l][i]);
    }
    output = std::move(merged);
  }
  if (output.front() != layout.primary.qubits()) throw ConfigError("internal: primary register mismatch");

  c.cnot_layer(layout.primary.qubits(), layout.copy.qubits());
  return loader;
}

}  // namespace qsim::encoding
