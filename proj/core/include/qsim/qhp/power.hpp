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

#ifndef QSIM_QHP_POWER_HPP_
#define QSIM_QHP_POWER_HPP_

#include <span>
#include <utility>
#include <vector>

#include "qsim/encoding/encoding.hpp"
#include "qsim/sim/circuit.hpp"
#include "qsim/sim/rng.hpp"

namespace qsim::qhp {

// Register-count versus measurement trade-off for the k-th power.
//   kNoMidReset: k parallel registers, ceil(lg k) CNOT rounds, unitary circuit.
//   kMidReset:   two data registers, k-1 rounds of load/CNOT/measure/reset.
enum class Style { kNoMidReset, kMidReset };

inline constexpr int kQhpTag = 1;

// (sum_j v_j^(2k))^(-1/2); the post-selection success probability is its
// inverse square.
double norm_constant(std::span<const double> values, unsigned k);
double success_probability(std::span<const double> values, unsigned k);
// Normalized elementwise power: norm_constant * v^k.
std::vector<double> power_state(std::span<const double> values, unsigned k);

// Greedy left-heavy pairing: in each round, registers (0,1), (2,3), ... are
// combined with the left one surviving; an odd register out waits.
std::vector<std::vector<std::pair<unsigned, unsigned>>> pairing_rounds(unsigned k);

struct PowerCircuit {
  Style style = Style::kNoMidReset;
  unsigned k = 1;
  sim::Circuit circuit{0};
  sim::Register output;               // data register carrying the power state
  std::vector<sim::Register> checks;  // must read 0 (kNoMidReset only)
  std::vector<sim::Register> blocks;  // qubits of each loader instance
  unsigned qhp_rounds = 0;
};

PowerCircuit build_power_circuit(const encoding::Loader& loader, unsigned k, Style style);

// Probability that every QHP check reads 0, taken from a prepared state.
double checks_zero_probability(const PowerCircuit& pc, const sim::Statevector& state);

// One shot of the mid-circuit style with dynamic stopping: execution halts at
// the first failed round. `loads` counts sequential loader layers: the first
// round loads both registers in parallel, so a failure at round t costs t,
// and a successful shot (including the final un-loading stage) costs k.
struct DynamicShot {
  bool success = false;
  unsigned failed_round = 0;  // 1-based; 0 when successful
  unsigned loads = 0;
};
DynamicShot run_dynamic_shot(const PowerCircuit& pc, sim::Statevector& state, sim::RngStream& rng);

// Expected loads from the closed form that models every round with the same
// success rate success_probability(k); exact for k <= 2.
double expected_loads_closed_form(double success_prob, unsigned k);
// Exact expectation from the per-round success rates of the data.
double expected_loads_exact(std::span<const double> values, unsigned k);

}  // namespace qsim::qhp

#endif  // QSIM_QHP_POWER_HPP_
