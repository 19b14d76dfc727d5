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

#include "qsim/qae/grover.hpp"

#include <numeric>

#include "qsim/error.hpp"

namespace qsim::qae {

GroverOracle::GroverOracle(sim::Circuit prepare, unsigned flag, GroverMode mode)
    : f_(std::move(prepare)), f_dag_(f_.inverse()), flag_(flag), mode_(mode), chi_(f_.width()), z_(0.0) {
  if (flag_ >= f_.width()) throw ConfigError("flag qubit outside oracle width");
  if (mode_ == GroverMode::kAuto) mode_ = f_.width() <= kAutoGateWidth ? GroverMode::kGate : GroverMode::kReflection;
  f_.apply(chi_);
  z_ = flag_probability(chi_);
}

void GroverOracle::apply_u(sim::Statevector& state) const {
  if (mode_ == GroverMode::kGate) {
    f_dag_.apply(state);
    sim::Register all(width());
    std::iota(all.begin(), all.end(), 0U);
    state.reflect_zero(all);
    f_.apply(state);
    return;
  }
  const sim::cplx overlap = chi_.inner(state);
  auto amps = state.amplitudes();
  const auto chi = chi_.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) amps[i] -= 2.0 * overlap * chi[i];
}

void GroverOracle::apply_grover(sim::Statevector& state) const {
  state.phase_flip_one(flag_);
  apply_u(state);
}

double GroverOracle::flag_probability(const sim::Statevector& state) const {
  return state.probability(sim::Register{flag_}, 1);
}

McxResources mcx_resources(unsigned controls) {
  McxResources r;
  r.controls = controls;
  if (controls >= 3) {
    r.ancillas = controls - 2;
    r.toffolis = 2 * controls - 3;
  } else if (controls == 2) {
    r.toffolis = 1;
  }
  return r;
}

}  // namespace qsim::qae
