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

#ifndef QSIM_QAE_GROVER_HPP_
#define QSIM_QAE_GROVER_HPP_

#include <cstdint>

#include "qsim/sim/circuit.hpp"
#include "qsim/sim/statevector.hpp"

namespace qsim::qae {

// How U = F Z F^dag is applied: by running F^dag, the zero reflection and F
// gate by gate, or by acting with I - 2|chi><chi| directly on the vector
// (chi = F|0>). Both are the same operator; kAuto picks the gate path for
// narrow oracles and the direct path above kAutoGateWidth qubits.
enum class GroverMode { kGate, kReflection, kAuto };
inline constexpr unsigned kAutoGateWidth = 12;

class GroverOracle {
 public:
  // `prepare` is F = R (A x I): a unitary whose `flag` qubit marks the good
  // subspace with |1>.
  GroverOracle(sim::Circuit prepare, unsigned flag, GroverMode mode = GroverMode::kAuto);

  unsigned width() const { return f_.width(); }
  unsigned flag() const { return flag_; }
  GroverMode mode() const { return mode_; }
  // Probability z of the good subspace in F|0>.
  double good_probability() const { return z_; }
  const sim::Statevector& prepared() const { return chi_; }
  const sim::Circuit& circuit() const { return f_; }

  void apply_u(sim::Statevector& state) const;
  // One Grover iterate U S, where S flips the sign of the good subspace.
  void apply_grover(sim::Statevector& state) const;
  double flag_probability(const sim::Statevector& state) const;

 private:
  sim::Circuit f_;
  sim::Circuit f_dag_;
  unsigned flag_;
  GroverMode mode_;
  sim::Statevector chi_;
  double z_;
};

// Decomposition figures for a multi-controlled X with `controls` controls:
// logical count 1; the V-chain realization borrows controls - 2 clean
// ancillas and uses 2 * controls - 3 Toffolis (controls >= 3).
struct McxResources {
  unsigned controls = 0;
  unsigned logical_gates = 1;
  unsigned ancillas = 0;
  unsigned toffolis = 0;
};
McxResources mcx_resources(unsigned controls);

}  // namespace qsim::qae

#endif  // QSIM_QAE_GROVER_HPP_
