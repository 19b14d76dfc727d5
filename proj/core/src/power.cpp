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

#include "qsim/qhp/power.hpp"

#include <cmath>
#include <numeric>

#include "qsim/error.hpp"

namespace qsim::qhp {
namespace {

sim::Register mapped(const sim::Register& reg, const std::vector<unsigned>& map) {
  sim::Register out(reg.size());
  for (std::size_t i = 0; i < reg.size(); ++i) out[i] = map[reg[i]];
  return out;
}

std::vector<unsigned> offset_map(unsigned width, unsigned offset) {
  std::vector<unsigned> m(width);
  std::iota(m.begin(), m.end(), offset);
  return m;
}

constexpr sim::Cost kLoadCost{1, 0};

}  // namespace

double norm_constant(std::span<const double> values, unsigned k) {
  if (k == 0) throw ConfigError("power index must be >= 1");
  double acc = 0.0;
  for (double v : values) acc += std::pow(v * v, static_cast<double>(k));
  if (!(acc > 0.0)) throw ZeroBranchError("elementwise power vanishes identically");
  return 1.0 / std::sqrt(acc);
}

double success_probability(std::span<const double> values, unsigned k) {
  const double a = norm_constant(values, k);
  return 1.0 / (a * a);
}

std::vector<double> power_state(std::span<const double> values, unsigned k) {
  const double a = norm_constant(values, k);
  std::vector<double> out(values.size());
  for (std::size_t j = 0; j < values.size(); ++j) out[j] = a * std::pow(values[j], static_cast<double>(k));
  return out;
}

std::vector<std::vector<std::pair<unsigned, unsigned>>> pairing_rounds(unsigned k) {
  if (k == 0) throw ConfigError("power index must be >= 1");
  std::vector<unsigned> alive(k);
  std::iota(alive.begin(), alive.end(), 0U);
  std::vector<std::vector<std::pair<unsigned, unsigned>>> rounds;
  while (alive.size() > 1) {
    std::vector<std::pair<unsigned, unsigned>> round;
    std::vector<unsigned> survivors;
    for (std::size_t i = 0; i + 1 < alive.size(); i += 2) {
      round.emplace_back(alive[i], alive[i + 1]);
      survivors.push_back(alive[i]);
    }
    if (alive.size() % 2 == 1) survivors.push_back(alive.back());
    rounds.push_back(std::move(round));
    alive = std::move(survivors);
  }
  return rounds;
}

PowerCircuit build_power_circuit(const encoding::Loader& loader, unsigned k, Style style) {
  if (k == 0) throw ConfigError("power index must be >= 1");
  const unsigned w = loader.width();
  const unsigned lg = loader.primary.count;
  if (loader.primary.start != 0) throw ConfigError("loader primary register must lead its layout");
  const sim::Register primary = loader.primary.qubits();

  PowerCircuit pc;
  pc.style = style;
  pc.k = k;

  if (style == Style::kNoMidReset || k == 1) {
    pc.circuit = sim::Circuit(k * w);
    std::vector<sim::Register> data(k);
    for (unsigned b = 0; b < k; ++b) {
      const auto map = offset_map(w, b * w);
      pc.circuit.append(loader.forward, map, kLoadCost);
      pc.blocks.emplace_back(map.begin(), map.end());
      data[b] = mapped(primary, map);
    }
    const auto rounds = pairing_rounds(k);
    for (const auto& round : rounds)
      for (const auto& [keep, fold] : round) {
        pc.circuit.cnot_layer(data[keep], data[fold]);
        pc.checks.push_back(data[fold]);
      }
    pc.qhp_rounds = static_cast<unsigned>(rounds.size());
    pc.output = data[0];
    return pc;
  }

  // Mid-circuit style: one persistent register, one reused data register and
  // (when the loader has side qubits) a fresh side register per round, since
  // resetting an entangled side register would collapse the data index.
  const unsigned side = w - lg;
  pc.circuit = sim::Circuit(w + lg + (k - 1) * side);
  const auto first = offset_map(w, 0);
  pc.circuit.append(loader.forward, first, kLoadCost);
  pc.blocks.emplace_back(first.begin(), first.end());
  pc.output = mapped(primary, first);
  const sim::Register reused = sim::QubitRange{w, lg}.qubits();
  for (unsigned t = 1; t < k; ++t) {
    std::vector<unsigned> map(w);
    for (unsigned q = 0; q < w; ++q) map[q] = q < lg ? reused[q] : w + lg + (t - 1) * side + (q - lg);
    pc.circuit.append(loader.forward, map, kLoadCost);
    pc.blocks.emplace_back(map.begin(), map.end());
    pc.circuit.cnot_layer(pc.output, reused);
    pc.circuit.measure(reused, kQhpTag);
    if (t + 1 < k) pc.circuit.reset(reused);
  }
  pc.qhp_rounds = k - 1;
  return pc;
}

double checks_zero_probability(const PowerCircuit& pc, const sim::Statevector& state) {
  sim::Register all;
  for (const auto& r : pc.checks) all.insert(all.end(), r.begin(), r.end());
  return all.empty() ? 1.0 : state.probability(all, 0);
}

DynamicShot run_dynamic_shot(const PowerCircuit& pc, sim::Statevector& state, sim::RngStream& rng) {
  if (pc.style != Style::kMidReset && pc.k > 1) throw ConfigError("dynamic stopping requires the mid-circuit style");
  DynamicShot shot;
  unsigned round = 0;
  const bool finished = pc.circuit.run(state, rng, [&](const sim::MeasureEvent& ev) {
    if (ev.tag != kQhpTag) return true;
    ++round;
    if (ev.outcome != 0) {
      shot.failed_round = round;
      return false;
    }
    return true;
  });
  shot.success = finished && shot.failed_round == 0;
  shot.loads = shot.success ? pc.k : shot.failed_round;
  return shot;
}

double expected_loads_closed_form(double success_prob, unsigned k) {
  if (k == 0) throw ConfigError("power index must be >= 1");
  const double q = success_prob;
  double tail = 0.0;
  for (unsigned j = 1; j < k; ++j) tail += j * std::pow(q, static_cast<double>(j - 1));
  return k * std::pow(q, static_cast<double>(k - 1)) + (1.0 - q) * tail;
}

double expected_loads_exact(std::span<const double> values, unsigned k) {
  if (k == 0) throw ConfigError("power index must be >= 1");
  double expect = 0.0;
  double reach = 1.0;  // probability the first t-1 rounds succeeded
  for (unsigned t = 1; t < k; ++t) {
    const double pass = success_probability(values, t + 1);
    expect += t * (reach - pass);
    reach = pass;
  }
  return expect + k * reach;
}

}  // namespace qsim::qhp
