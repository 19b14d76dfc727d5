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

// Helpers shared by the unit tests and the acceptance runner.
#ifndef QSIM_TESTS_SUPPORT_HPP_
#define QSIM_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "qsim/encoding/encoding.hpp"
#include "qsim/qhp/power.hpp"
#include "qsim/sim/rng.hpp"
#include "qsim/sim/statevector.hpp"

namespace qsim::testing {

inline std::vector<double> random_positive(std::size_t n, std::uint64_t seed, double lo = 0.1, double hi = 1.1) {
  sim::RngStream rng(seed, 977);
  std::vector<double> v(n);
  for (auto& x : v) x = lo + (hi - lo) * rng.uniform();
  return v;
}

struct PostselectedPower {
  double weight = 0.0;     // probability of the all-pass branch
  double max_error = 0.0;  // max amplitude deviation from a_k v^k (x) |0>
};

// Runs a power circuit over an amplitude loader on |0>, keeps the all-pass
// branch and compares it with the classical power state.
inline PostselectedPower postselect_power(const qhp::PowerCircuit& pc, std::span<const double> values) {
  sim::Statevector state(pc.circuit.width());
  PostselectedPower out;
  if (pc.circuit.is_unitary()) {
    pc.circuit.apply(state);
    sim::Register all;
    for (const auto& r : pc.checks) all.insert(all.end(), r.begin(), r.end());
    out.weight = all.empty() ? 1.0 : state.project(all, 0);
  } else {
    out.weight = pc.circuit.run_postselect_zero(state);
  }
  const auto expected = qhp::power_state(values, pc.k);
  const std::uint64_t out_mask = sim::register_mask(pc.output);
  for (std::size_t i = 0; i < state.size(); ++i) {
    double want = 0.0;
    if ((i & ~out_mask) == 0) want = expected[sim::register_value(i, pc.output)];
    out.max_error = std::max(out.max_error, std::abs(state[i] - std::complex<double>(want, 0.0)));
  }
  return out;
}

// Largest entry of |G - I| for the normalized side states attached to each
// primary index of a loaded state.
inline double side_gram_defect(const sim::Statevector& state, const sim::Register& primary) {
  const std::uint64_t mask = sim::register_mask(primary);
  const std::size_t n = std::size_t{1} << primary.size();
  std::vector<std::map<std::uint64_t, std::complex<double>>> side(n);
  for (std::size_t i = 0; i < state.size(); ++i)
    if (std::abs(state[i]) > 0.0) side[sim::register_value(i, primary)][i & ~mask] = state[i];
  std::vector<double> norm(n, 0.0);
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& [_, a] : side[j]) norm[j] += std::norm(a);
  double worst = 0.0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::complex<double> g = 0.0;
      for (const auto& [rest, amp] : side[a]) {
        const auto it = side[b].find(rest);
        if (it != side[b].end()) g += std::conj(amp) * it->second;
      }
      g /= std::sqrt(norm[a] * norm[b]);
      worst = std::max(worst, std::abs(g - (a == b ? 1.0 : 0.0)));
    }
  return worst;
}

}  // namespace qsim::testing

#endif  // QSIM_TESTS_SUPPORT_HPP_
