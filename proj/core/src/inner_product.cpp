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

#include "qsim/inner/inner_product.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "qsim/error.hpp"
#include "qsim/inner/shot_budget.hpp"

namespace qsim::inner {
namespace {

constexpr sim::Cost kLoadCost{1, 0};
constexpr std::uint64_t kShotCap = 200'000'000;

sim::Register concat_all(const std::vector<sim::Register>& regs) {
  sim::Register out;
  for (const auto& r : regs) out.insert(out.end(), r.begin(), r.end());
  return out;
}

}  // namespace

InnerCircuit build_inner_circuit(const qhp::PowerCircuit& power, const encoding::Loader& price, Method method) {
  InnerCircuit ic;
  ic.method = method;
  ic.power = power;
  const bool mid = !power.circuit.is_unitary();
  const unsigned pw = power.circuit.width();

  if (method == Method::kAncillaFree) {
    if (price.width() != price.primary.count)
      throw ConfigError("ancilla-free test needs a loader without side qubits");
    if (price.width() != power.output.size()) throw ConfigError("price register width differs from data register");
    ic.circuit = power.circuit;
    ic.circuit.append(price.adjoint(), power.output, kLoadCost);
    ic.result = power.output;
    ic.price_block = power.output;
  } else {
    if (price.primary.count != power.output.size()) throw ConfigError("price register width differs from data register");
    const unsigned ancilla = pw + price.width();
    ic.circuit = sim::Circuit(ancilla + 1);
    ic.circuit.append(power.circuit, 0);
    ic.circuit.append(price.forward, pw, kLoadCost);
    ic.price_block = sim::QubitRange{pw, price.width()}.qubits();
    sim::Register price_primary(price.primary.count);
    for (unsigned i = 0; i < price.primary.count; ++i) price_primary[i] = pw + price.primary.start + i;
    ic.circuit.gate(ancilla, sim::gates::h());
    ic.circuit.cswap(ancilla, power.output, price_primary);
    ic.circuit.gate(ancilla, sim::gates::h());
    ic.result = {ancilla};
  }
  if (mid) ic.circuit.measure(ic.result, kResultTag);
  return ic;
}

OutcomeTable outcome_table(const InnerCircuit& ic, const sim::Statevector& state) {
  const std::uint64_t check_mask = sim::register_mask(concat_all(ic.power.checks));
  const std::uint64_t result_mask = sim::register_mask(ic.result);
  double pass = 0.0;
  double pass_zero = 0.0;
  const auto amps = state.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if (i & check_mask) continue;
    const double w = std::norm(amps[i]);
    pass += w;
    if ((i & result_mask) == 0) pass_zero += w;
  }
  OutcomeTable t;
  t.pass_zero = pass_zero;
  t.pass_nonzero = std::max(0.0, pass - pass_zero);
  t.fail = std::max(0.0, 1.0 - pass);
  return t;
}

OutcomeTable outcome_table(const InnerCircuit& ic) {
  if (!ic.circuit.is_unitary()) throw ConfigError("outcome table needs a unitary circuit");
  sim::Statevector state(ic.circuit.width());
  ic.circuit.apply(state);
  return outcome_table(ic, state);
}

ShotSource::ShotSource(InnerCircuit ic) : ic_(std::move(ic)) {
  if (ic_.circuit.is_unitary()) table_ = outcome_table(ic_);
}

Shot ShotSource::draw(sim::RngStream& rng) const {
  Shot shot;
  if (ic_.circuit.is_unitary()) {
    const double u = rng.uniform();
    shot.pass = u < table_.pass_zero + table_.pass_nonzero;
    shot.zero = u < table_.pass_zero;
    return shot;
  }
  sim::Statevector state(ic_.circuit.width());
  unsigned round = 0;
  unsigned failed = 0;
  const bool done = ic_.circuit.run(state, rng, [&](const sim::MeasureEvent& ev) {
    if (ev.tag == qhp::kQhpTag) {
      ++round;
      if (ev.outcome != 0) {
        failed = round;
        return false;
      }
    } else if (ev.tag == kResultTag) {
      shot.zero = ev.outcome == 0;
    }
    return true;
  });
  shot.pass = done && failed == 0;
  if (!shot.pass) shot.zero = false;
  shot.loads = shot.pass ? ic_.power.k : failed;
  return shot;
}

ShotTally collect(const ShotSource& source, std::uint64_t shots, sim::RngStream& rng) {
  ShotTally t;
  t.shots = shots;
  for (std::uint64_t s = 0; s < shots; ++s) {
    const Shot shot = source.draw(rng);
    t.pass += shot.pass;
    t.pass_zero += shot.pass && shot.zero;
    t.loads += shot.loads;
  }
  return t;
}

double swap_statistic(const ShotTally& t) {
  if (t.shots == 0) throw ConfigError("no shots collected");
  return (2.0 * static_cast<double>(t.pass_zero) - static_cast<double>(t.pass)) / static_cast<double>(t.shots);
}

double overlap_swap_estimate(const ShotTally& t) { return std::sqrt(std::max(0.0, swap_statistic(t))); }

double overlap_ancilla_free_estimate(const ShotTally& t) {
  if (t.shots == 0) throw ConfigError("no shots collected");
  return std::sqrt(static_cast<double>(t.pass_zero) / static_cast<double>(t.shots));
}

InnerCircuit build_overlap_circuit(const encoding::NormalizedSeries& a, const encoding::NormalizedSeries& b,
                                   Method method) {
  const auto la = encoding::load_amplitude(encoding::StateTree(a.values));
  const auto lb = encoding::load_amplitude(encoding::StateTree(b.values));
  return build_inner_circuit(qhp::build_power_circuit(la, 1, qhp::Style::kNoMidReset), lb, method);
}

namespace {

InnerCircuit make_circuit(const encoding::NormalizedSeries& series, const encoding::NormalizedSeries& price,
                          unsigned k, Scheme scheme, qhp::Style style, unsigned split_level) {
  if (series.size() != price.size()) throw AssumptionError("series lengths differ");
  const encoding::StateTree ts(series.values);
  const encoding::StateTree tp(price.values);
  if (scheme == Scheme::kBoeSwap) {
    const auto lt = encoding::load_boe(ts, split_level);
    const auto lp = encoding::load_boe(tp, split_level);
    return build_inner_circuit(qhp::build_power_circuit(lt, k, style), lp, Method::kSwap);
  }
  const auto lt = encoding::load_amplitude(ts);
  const auto lp = encoding::load_amplitude(tp);
  const Method m = scheme == Scheme::kAmplitudeSwap ? Method::kSwap : Method::kAncillaFree;
  return build_inner_circuit(qhp::build_power_circuit(lt, k, style), lp, m);
}

}  // namespace

InnerEstimator::InnerEstimator(const encoding::NormalizedSeries& series, const encoding::NormalizedSeries& price,
                               unsigned k, Scheme scheme, qhp::Style style, unsigned split_level)
    : k_(k),
      scheme_(scheme),
      exact_(0.0),
      rescale_(1.0),
      qhp_success_(qhp::success_probability(series.values, k)),
      source_(make_circuit(series, price, k, scheme, style, split_level)) {
  const bool boe = scheme == Scheme::kBoeSwap;
  const auto want = boe ? encoding::Normalization::kSqrt : encoding::Normalization::kAffine;
  if (series.kind != want || price.kind != want)
    throw ConfigError(boe ? "bidirectional scheme expects sqrt-normalized series"
                          : "amplitude schemes expect affine-normalized series");
  for (std::size_t j = 0; j < series.size(); ++j) {
    const double p = std::pow(series.values[j], static_cast<double>(k));
    exact_ += boe ? price.values[j] * price.values[j] * p * p : price.values[j] * p;
  }
  const double kk = static_cast<double>(k);
  rescale_ = boe ? std::pow(series.rho, -2.0 * kk) * std::pow(price.rho, -2.0)
                 : std::pow(series.rho, -kk) / price.rho;
}

SampleEstimate InnerEstimator::finish(const ShotTally& t) const {
  SampleEstimate est;
  est.shots = t.shots;
  est.pass = t.pass;
  est.pass_zero = t.pass_zero;
  if (source_.per_shot_simulation()) est.mean_loads = static_cast<double>(t.loads) / static_cast<double>(t.shots);
  switch (scheme_) {
    case Scheme::kAmplitudeAncillaFree:
      est.value = overlap_ancilla_free_estimate(t);
      break;
    case Scheme::kAmplitudeSwap: {
      const double stat = swap_statistic(t);
      est.clamped = stat < 0.0;
      est.value = std::sqrt(std::max(0.0, stat));
      break;
    }
    case Scheme::kBoeSwap:
      est.value = swap_statistic(t);
      break;
  }
  est.rescaled = est.value * rescale_;
  return est;
}

SampleEstimate InnerEstimator::estimate_with_shots(std::uint64_t shots, sim::RngStream& rng) const {
  if (shots == 0) throw ConfigError("shot count must be positive");
  if (shots > kShotCap)
    throw AssumptionError("k=" + std::to_string(k_) + " needs " + std::to_string(shots) + " shots, above the cap of " +
                          std::to_string(kShotCap) + "; raise epsilon or force a per-term accuracy");
  return finish(collect(source_, shots, rng));
}

SampleEstimate InnerEstimator::estimate(double epsilon, double alpha, sim::RngStream& rng) const {
  switch (scheme_) {
    case Scheme::kAmplitudeAncillaFree:
      return estimate_with_shots(with_floor(shots_power_ancilla_free(epsilon, alpha)), rng);
    case Scheme::kBoeSwap:
      return estimate_with_shots(with_floor(shots_boe_swap(epsilon, alpha)), rng);
    case Scheme::kAmplitudeSwap:
      break;
  }
  // Two stages: a pilot sized by the y-independent term, then a fresh run
  // sized from the pilot's estimates of the power success rate and of y.
  const double z = z_split(alpha);
  const std::uint64_t pilot = with_floor(static_cast<std::uint64_t>(std::ceil(4.0 * z * z / (epsilon * epsilon))));
  sim::RngStream pilot_rng = rng.split(0x9117);
  const SampleEstimate first = estimate_with_shots(pilot, pilot_rng);
  const double y_pilot = std::max(first.value, epsilon);
  const double q_pilot = std::max(static_cast<double>(first.pass), 1.0) / static_cast<double>(pilot);
  SampleEstimate est = estimate_with_shots(with_floor(shots_power_swap(q_pilot, y_pilot, epsilon, alpha)), rng);
  est.pilot_shots = pilot;
  est.clamped = est.clamped || first.clamped;
  return est;
}

}  // namespace qsim::inner
