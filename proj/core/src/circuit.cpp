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

#include "qsim/sim/circuit.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "qsim/error.hpp"

namespace qsim::sim {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Register remap(const Register& reg, std::span<const unsigned> map) {
  Register out(reg.size());
  for (std::size_t i = 0; i < reg.size(); ++i) out[i] = map[reg[i]];
  return out;
}

std::vector<Control> remap(const std::vector<Control>& cs, std::span<const unsigned> map) {
  std::vector<Control> out = cs;
  for (Control& c : out) c.qubit = map[c.qubit];
  return out;
}

Op remap(const Op& o, std::span<const unsigned> map) {
  return std::visit(
      overloaded{
          [&](const op::Gate& g) -> Op { return op::Gate{map[g.target], g.matrix, remap(g.controls, map)}; },
          [&](const op::CnotLayer& c) -> Op { return op::CnotLayer{remap(c.controls, map), remap(c.targets, map)}; },
          [&](const op::Mcx& m) -> Op { return op::Mcx{remap(m.controls, map), map[m.target]}; },
          [&](const op::CSwap& s) -> Op { return op::CSwap{map[s.control], remap(s.a, map), remap(s.b, map)}; },
          [&](const op::ReflectZero& r) -> Op { return op::ReflectZero{remap(r.reg, map)}; },
          [&](const op::Measure& m) -> Op { return op::Measure{remap(m.reg, map), m.tag}; },
          [&](const op::Reset& r) -> Op { return op::Reset{remap(r.reg, map)}; },
      },
      o);
}

Register with_controls(unsigned target, const std::vector<Control>& cs) {
  Register q{target};
  for (const Control& c : cs) q.push_back(c.qubit);
  return q;
}

Register concat(const Register& a, const Register& b) {
  Register out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

void apply_op(Statevector& state, const Op& o) {
  std::visit(overloaded{
                 [&](const op::Gate& g) { state.apply_single_qubit(g.target, g.matrix, g.controls); },
                 [&](const op::CnotLayer& c) { state.apply_cnot_layer(c.controls, c.targets); },
                 [&](const op::Mcx& m) { state.apply_multi_controlled_x(m.controls, m.target); },
                 [&](const op::CSwap& s) { state.controlled_swap(s.control, s.a, s.b); },
                 [&](const op::ReflectZero& r) { state.reflect_zero(r.reg); },
                 [&](const op::Measure&) { throw ConfigError("measurement inside a unitary application"); },
                 [&](const op::Reset&) { throw ConfigError("reset inside a unitary application"); },
             },
             o);
}

bool Circuit::is_unitary() const {
  return std::none_of(ops_.begin(), ops_.end(), [](const Op& o) {
    return std::holds_alternative<op::Measure>(o) || std::holds_alternative<op::Reset>(o);
  });
}

void Circuit::push(Op o, Register qubits, Cost cost) {
  for (unsigned q : qubits)
    if (q >= width_) throw ConfigError("qubit " + std::to_string(q) + " outside circuit width " + std::to_string(width_));
  ops_.push_back(std::move(o));
  steps_.push_back({std::move(qubits), cost});
}

void Circuit::gate(unsigned target, const Matrix2& m, std::vector<Control> controls) {
  if (gates::unitarity_defect(m) > tolerance::kUnitarity) throw ConfigError("gate matrix is not unitary");
  Register q = with_controls(target, controls);
  push(op::Gate{target, m, std::move(controls)}, std::move(q), {0, 1});
}

void Circuit::cnot_layer(Register controls, Register targets) {
  if (controls.size() != targets.size()) throw ConfigError("CNOT layer registers differ in length");
  Register q = concat(controls, targets);
  push(op::CnotLayer{std::move(controls), std::move(targets)}, std::move(q), {0, 1});
}

void Circuit::mcx(std::vector<Control> controls, unsigned target) {
  Register q = with_controls(target, controls);
  push(op::Mcx{std::move(controls), target}, std::move(q), {0, 1});
}

void Circuit::cswap(unsigned control, Register a, Register b) {
  Register q = concat(Register{control}, concat(a, b));
  const int layers = 3 * static_cast<int>(a.size());
  push(op::CSwap{control, std::move(a), std::move(b)}, std::move(q), {0, layers});
}

void Circuit::reflect_zero(Register reg) {
  Register q = reg;
  push(op::ReflectZero{std::move(reg)}, std::move(q), {0, 1});
}

void Circuit::measure(Register reg, int tag) {
  Register q = reg;
  push(op::Measure{std::move(reg), tag}, std::move(q), {0, 0});
}

void Circuit::reset(Register reg) {
  Register q = reg;
  push(op::Reset{std::move(reg)}, std::move(q), {0, 0});
}

void Circuit::append(const Circuit& sub, std::span<const unsigned> map, std::optional<Cost> block_cost) {
  if (map.size() != sub.width_) throw ConfigError("qubit map size does not match sub-circuit width");
  for (unsigned q : map)
    if (q >= width_) throw ConfigError("qubit map points outside circuit width");
  for (const Op& o : sub.ops_) ops_.push_back(remap(o, map));
  if (block_cost) {
    steps_.push_back({Register(map.begin(), map.end()), *block_cost});
  } else {
    for (const Step& s : sub.steps_) steps_.push_back({remap(s.qubits, map), s.cost});
  }
}

void Circuit::append(const Circuit& sub, unsigned offset, std::optional<Cost> block_cost) {
  std::vector<unsigned> map(sub.width_);
  std::iota(map.begin(), map.end(), offset);
  append(sub, map, block_cost);
}

Circuit Circuit::inverse() const {
  Circuit inv(width_);
  inv.ops_.reserve(ops_.size());
  for (auto it = ops_.rbegin(); it != ops_.rend(); ++it) {
    if (const auto* g = std::get_if<op::Gate>(&*it)) {
      inv.ops_.push_back(op::Gate{g->target, gates::adjoint(g->matrix), g->controls});
    } else if (std::holds_alternative<op::Measure>(*it) || std::holds_alternative<op::Reset>(*it)) {
      throw ConfigError("cannot invert a circuit containing measurements or resets");
    } else {
      inv.ops_.push_back(*it);
    }
  }
  inv.steps_.assign(steps_.rbegin(), steps_.rend());
  return inv;
}

void Circuit::apply(Statevector& state) const {
  if (state.n_qubits() != width_) throw ConfigError("state width does not match circuit width");
  for (const Op& o : ops_) apply_op(state, o);
}

bool Circuit::run(Statevector& state, RngStream& rng, const MeasureObserver& observer) const {
  if (state.n_qubits() != width_) throw ConfigError("state width does not match circuit width");
  for (const Op& o : ops_) {
    if (const auto* m = std::get_if<op::Measure>(&o)) {
      const MeasureResult r = state.measure(m->reg, rng);
      if (observer && !observer({m->tag, r.outcome, r.probability})) return false;
    } else if (const auto* r = std::get_if<op::Reset>(&o)) {
      state.reset(r->reg, rng);
    } else {
      apply_op(state, o);
    }
  }
  return true;
}

double Circuit::run_postselect_zero(Statevector& state) const {
  if (state.n_qubits() != width_) throw ConfigError("state width does not match circuit width");
  double weight = 1.0;
  for (const Op& o : ops_) {
    if (const auto* m = std::get_if<op::Measure>(&o)) {
      weight *= state.project(m->reg, 0);
    } else if (const auto* r = std::get_if<op::Reset>(&o)) {
      if (state.probability(r->reg, 0) < 1.0 - 1e-9)
        throw ConfigError("postselected run reached a reset on a register not in |0>");
    } else {
      apply_op(state, o);
    }
  }
  return weight;
}

Cost Circuit::depth() const {
  std::vector<Cost> ready(width_);
  Cost total;
  for (const Step& s : steps_) {
    Cost start;
    for (unsigned q : s.qubits) start = std::max(start, ready[q]);
    const Cost end = start + s.cost;
    for (unsigned q : s.qubits) ready[q] = end;
    total = std::max(total, end);
  }
  return total;
}

}  // namespace qsim::sim
