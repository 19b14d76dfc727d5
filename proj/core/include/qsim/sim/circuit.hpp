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

#ifndef QSIM_SIM_CIRCUIT_HPP_
#define QSIM_SIM_CIRCUIT_HPP_

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "qsim/sim/rng.hpp"
#include "qsim/sim/statevector.hpp"
#include "qsim/sim/types.hpp"

namespace qsim::sim {

// Depth in units of (state-loader invocations, elementary layers). Compared
// lexicographically: one loader is assumed to dominate any constant number of
// elementary layers, which is how loader depth is treated symbolically.
struct Cost {
  int loads = 0;
  int layers = 0;

  auto operator<=>(const Cost&) const = default;
  Cost operator+(const Cost& o) const { return {loads + o.loads, layers + o.layers}; }
};

namespace op {
struct Gate {
  unsigned target;
  Matrix2 matrix;
  std::vector<Control> controls;
};
struct CnotLayer {
  Register controls;
  Register targets;
};
struct Mcx {
  std::vector<Control> controls;
  unsigned target;
};
struct CSwap {
  unsigned control;
  Register a;
  Register b;
};
struct ReflectZero {
  Register reg;
};
struct Measure {
  Register reg;
  int tag;
};
struct Reset {
  Register reg;
};
}  // namespace op

using Op = std::variant<op::Gate, op::CnotLayer, op::Mcx, op::CSwap, op::ReflectZero, op::Measure, op::Reset>;

struct MeasureEvent {
  int tag = 0;
  std::uint64_t outcome = 0;
  double probability = 0.0;
};

// Called after every measurement; returning false stops execution.
using MeasureObserver = std::function<bool(const MeasureEvent&)>;

class Circuit {
 public:
  explicit Circuit(unsigned width) : width_(width) {}

  unsigned width() const { return width_; }
  const std::vector<Op>& ops() const { return ops_; }
  bool is_unitary() const;

  void gate(unsigned target, const Matrix2& m, std::vector<Control> controls = {});
  void cnot_layer(Register controls, Register targets);
  void mcx(std::vector<Control> controls, unsigned target);
  void cswap(unsigned control, Register a, Register b);
  void reflect_zero(Register reg);
  void measure(Register reg, int tag);
  void reset(Register reg);

  // Appends `sub` with its qubit q placed on `map[q]`. When `block_cost` is
  // given the whole block is scheduled as one step of that cost.
  void append(const Circuit& sub, std::span<const unsigned> map, std::optional<Cost> block_cost = {});
  void append(const Circuit& sub, unsigned offset = 0, std::optional<Cost> block_cost = {});

  Circuit inverse() const;

  // Unitary circuits only.
  void apply(Statevector& state) const;
  // Executes measurements and resets by sampling; stops early when the
  // observer returns false. Returns true when the whole circuit ran.
  bool run(Statevector& state, RngStream& rng, const MeasureObserver& observer = {}) const;
  // Replaces each measurement with a projection onto outcome 0 and returns the
  // product of branch weights. Resets must then act on registers already at 0.
  double run_postselect_zero(Statevector& state) const;

  // ASAP depth under the step costs.
  Cost depth() const;
  std::size_t gate_count() const { return ops_.size(); }

 private:
  struct Step {
    Register qubits;
    Cost cost;
  };

  void push(Op op, Register qubits, Cost cost);

  unsigned width_;
  std::vector<Op> ops_;
  std::vector<Step> steps_;
};

void apply_op(Statevector& state, const Op& op);

}  // namespace qsim::sim

#endif  // QSIM_SIM_CIRCUIT_HPP_
