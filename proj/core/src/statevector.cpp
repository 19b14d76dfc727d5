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

#include "qsim/sim/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qsim/error.hpp"

namespace qsim::sim {

namespace gates {

Matrix2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
Matrix2 x() { return {0.0, 1.0, 1.0, 0.0}; }
Matrix2 z() { return {1.0, 0.0, 0.0, -1.0}; }

Matrix2 h() {
  const double s = 1.0 / std::sqrt(2.0);
  return {s, s, s, -s};
}

Matrix2 ry(double theta) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  return {c, -s, s, c};
}

Matrix2 adjoint(const Matrix2& m) {
  return {std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])};
}

double unitarity_defect(const Matrix2& m) {
  const Matrix2 a = adjoint(m);
  const cplx p00 = a[0] * m[0] + a[1] * m[2];
  const cplx p01 = a[0] * m[1] + a[1] * m[3];
  const cplx p10 = a[2] * m[0] + a[3] * m[2];
  const cplx p11 = a[2] * m[1] + a[3] * m[3];
  return std::sqrt(std::norm(p00 - 1.0) + std::norm(p01) + std::norm(p10) + std::norm(p11 - 1.0));
}

}  // namespace gates

namespace {

void check_qubit(unsigned q, unsigned n) {
  if (q >= n) throw ConfigError("qubit " + std::to_string(q) + " out of range for " +
                                std::to_string(n) + "-qubit state");
}

void check_register(const Register& reg, unsigned n) {
  std::uint64_t seen = 0;
  for (unsigned q : reg) {
    check_qubit(q, n);
    if (seen & (1ULL << q)) throw ConfigError("register lists qubit " + std::to_string(q) + " twice");
    seen |= 1ULL << q;
  }
}

struct ControlMask {
  std::uint64_t mask = 0;
  std::uint64_t value = 0;
};

ControlMask control_mask(std::span<const Control> controls, unsigned target, unsigned n) {
  ControlMask cm;
  for (const Control& c : controls) {
    check_qubit(c.qubit, n);
    const std::uint64_t bit = 1ULL << c.qubit;
    if (c.qubit == target) throw ConfigError("control coincides with target qubit");
    if (cm.mask & bit) throw ConfigError("duplicate control qubit " + std::to_string(c.qubit));
    cm.mask |= bit;
    if (c.on_one) cm.value |= bit;
  }
  return cm;
}

}  // namespace

std::uint64_t register_value(std::uint64_t basis_index, const Register& reg) {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < reg.size(); ++i) v |= ((basis_index >> reg[i]) & 1ULL) << i;
  return v;
}

std::uint64_t register_mask(const Register& reg) {
  std::uint64_t m = 0;
  for (unsigned q : reg) m |= 1ULL << q;
  return m;
}

Statevector::Statevector(unsigned n_qubits) : n_(n_qubits) {
  if (n_qubits > kMaxQubits) throw ConfigError("statevector limited to " + std::to_string(kMaxQubits) + " qubits");
  amps_.assign(std::size_t{1} << n_qubits, cplx{0.0, 0.0});
  amps_[0] = 1.0;
}

Statevector Statevector::from_amplitudes(std::vector<cplx> amplitudes) {
  const std::size_t size = amplitudes.size();
  if (size == 0 || (size & (size - 1)) != 0) throw ConfigError("amplitude count must be a power of two");
  unsigned n = 0;
  while ((std::size_t{1} << n) < size) ++n;
  Statevector s(n);
  s.amps_ = std::move(amplitudes);
  if (std::abs(s.norm_squared() - 1.0) > tolerance::kNorm) throw ConfigError("amplitudes are not normalized");
  return s;
}

double Statevector::norm_squared() const {
  double acc = 0.0;
  for (const cplx& a : amps_) acc += std::norm(a);
  return acc;
}

void Statevector::normalize() {
  const double ns = norm_squared();
  if (ns < tolerance::kZeroBranch) throw ZeroBranchError("cannot normalize a zero vector");
  const double inv = 1.0 / std::sqrt(ns);
  for (cplx& a : amps_) a *= inv;
}

void Statevector::apply_single_qubit(unsigned target, const Matrix2& u, std::span<const Control> controls) {
  check_qubit(target, n_);
  if (gates::unitarity_defect(u) > tolerance::kUnitarity) throw ConfigError("gate matrix is not unitary");
  const ControlMask cm = control_mask(controls, target, n_);
  const std::size_t bit = std::size_t{1} << target;
  const std::size_t size = amps_.size();
  const bool diagonal = u[1] == cplx{} && u[2] == cplx{};
  for (std::size_t hi = 0; hi < size; hi += 2 * bit) {
    for (std::size_t lo = 0; lo < bit; ++lo) {
      const std::size_t i0 = hi + lo;
      if ((i0 & cm.mask) != cm.value) continue;
      const std::size_t i1 = i0 | bit;
      const cplx a0 = amps_[i0];
      const cplx a1 = amps_[i1];
      if (diagonal) {
        amps_[i0] = u[0] * a0;
        amps_[i1] = u[3] * a1;
      } else {
        amps_[i0] = u[0] * a0 + u[1] * a1;
        amps_[i1] = u[2] * a0 + u[3] * a1;
      }
    }
  }
}

void Statevector::apply_cnot_layer(const Register& controls, const Register& targets) {
  if (controls.size() != targets.size()) throw ConfigError("CNOT layer registers differ in length");
  check_register(controls, n_);
  check_register(targets, n_);
  if (register_mask(controls) & register_mask(targets)) throw ConfigError("CNOT layer registers overlap");
  std::vector<cplx> out(amps_.size());
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    std::size_t j = i;
    for (std::size_t b = 0; b < controls.size(); ++b) j ^= ((i >> controls[b]) & 1ULL) << targets[b];
    out[j] = amps_[i];
  }
  amps_.swap(out);
}

void Statevector::apply_cnot_layer(QubitRange controls, QubitRange targets) {
  apply_cnot_layer(controls.qubits(), targets.qubits());
}

void Statevector::apply_multi_controlled_x(std::span<const Control> controls, unsigned target) {
  check_qubit(target, n_);
  const ControlMask cm = control_mask(controls, target, n_);
  const std::size_t bit = std::size_t{1} << target;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if ((i & bit) || (i & cm.mask) != cm.value) continue;
    std::swap(amps_[i], amps_[i | bit]);
  }
}

void Statevector::controlled_swap(unsigned control, const Register& a, const Register& b) {
  if (a.size() != b.size()) throw ConfigError("swapped registers differ in length");
  check_qubit(control, n_);
  check_register(a, n_);
  check_register(b, n_);
  const std::uint64_t cbit = 1ULL << control;
  if ((register_mask(a) & register_mask(b)) || ((register_mask(a) | register_mask(b)) & cbit))
    throw ConfigError("controlled swap operands overlap");
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (!(i & cbit)) continue;
    std::size_t j = i;
    for (std::size_t k = 0; k < a.size(); ++k) {
      const std::size_t ba = (i >> a[k]) & 1ULL;
      const std::size_t bb = (i >> b[k]) & 1ULL;
      if (ba != bb) j ^= (std::size_t{1} << a[k]) | (std::size_t{1} << b[k]);
    }
    if (j > i) std::swap(amps_[i], amps_[j]);
  }
}

void Statevector::reflect_zero(const Register& reg) {
  check_register(reg, n_);
  const std::uint64_t mask = register_mask(reg);
  for (std::size_t i = 0; i < amps_.size(); ++i)
    if ((i & mask) == 0) amps_[i] = -amps_[i];
}

void Statevector::phase_flip_one(unsigned qubit) {
  check_qubit(qubit, n_);
  const std::uint64_t bit = 1ULL << qubit;
  for (std::size_t i = 0; i < amps_.size(); ++i)
    if (i & bit) amps_[i] = -amps_[i];
}

double Statevector::probability(const Register& reg, std::uint64_t value) const {
  check_register(reg, n_);
  double p = 0.0;
  for (std::size_t i = 0; i < amps_.size(); ++i)
    if (register_value(i, reg) == value) p += std::norm(amps_[i]);
  return p;
}

std::vector<double> Statevector::marginal(const Register& reg) const {
  check_register(reg, n_);
  std::vector<double> m(std::size_t{1} << reg.size(), 0.0);
  for (std::size_t i = 0; i < amps_.size(); ++i) m[register_value(i, reg)] += std::norm(amps_[i]);
  return m;
}

double Statevector::project(const Register& reg, std::uint64_t value) {
  const double p = probability(reg, value);
  if (p < tolerance::kZeroBranch) throw ZeroBranchError("postselected branch has zero probability");
  const double inv = 1.0 / std::sqrt(p);
  for (std::size_t i = 0; i < amps_.size(); ++i)
    amps_[i] = register_value(i, reg) == value ? amps_[i] * inv : cplx{};
  return p;
}

MeasureResult Statevector::measure(const Register& reg, RngStream& rng) {
  const std::vector<double> m = marginal(reg);
  const double u = rng.uniform() * std::accumulate(m.begin(), m.end(), 0.0);
  double acc = 0.0;
  std::uint64_t outcome = m.size() - 1;
  for (std::size_t v = 0; v < m.size(); ++v) {
    acc += m[v];
    if (u < acc && m[v] > 0.0) {
      outcome = v;
      break;
    }
  }
  while (m[outcome] <= 0.0 && outcome > 0) --outcome;
  const double p = project(reg, outcome);
  return {outcome, p};
}

std::pair<double, Statevector> Statevector::postselect(const Register& reg, std::uint64_t value) const {
  Statevector projected = *this;
  const double p = projected.project(reg, value);
  const std::uint64_t mask = register_mask(reg);
  Register keep;
  for (unsigned q = 0; q < n_; ++q)
    if (!(mask & (1ULL << q))) keep.push_back(q);
  Statevector out(static_cast<unsigned>(keep.size()));
  for (std::size_t i = 0; i < projected.amps_.size(); ++i) {
    if (register_value(i, reg) != value) continue;
    out.amps_[register_value(i, keep)] = projected.amps_[i];
  }
  return {p, std::move(out)};
}

void Statevector::reset(const Register& reg, RngStream& rng) {
  const MeasureResult r = measure(reg, rng);
  if (r.outcome == 0) return;
  std::size_t flip = 0;
  for (std::size_t b = 0; b < reg.size(); ++b)
    if ((r.outcome >> b) & 1ULL) flip |= std::size_t{1} << reg[b];
  std::vector<cplx> out(amps_.size());
  for (std::size_t i = 0; i < amps_.size(); ++i) out[i ^ flip] = amps_[i];
  amps_.swap(out);
}

std::map<std::uint64_t, std::uint64_t> Statevector::sample_counts(std::uint64_t shots, RngStream& rng) const {
  std::vector<double> probs(amps_.size());
  for (std::size_t i = 0; i < amps_.size(); ++i) probs[i] = std::norm(amps_[i]);
  const Sampler sampler(probs);
  std::map<std::uint64_t, std::uint64_t> counts;
  for (std::uint64_t s = 0; s < shots; ++s) ++counts[sampler.draw(rng)];
  return counts;
}

cplx Statevector::inner(const Statevector& other) const {
  if (other.n_ != n_) throw ConfigError("inner product of states with different widths");
  cplx acc{};
  for (std::size_t i = 0; i < amps_.size(); ++i) acc += std::conj(amps_[i]) * other.amps_[i];
  return acc;
}

Sampler::Sampler(std::span<const double> probabilities) : cdf_(probabilities.size()) {
  if (probabilities.empty()) throw ConfigError("sampler needs at least one outcome");
  double acc = 0.0;
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    if (probabilities[i] < 0.0) throw ConfigError("negative probability");
    acc += probabilities[i];
    cdf_[i] = acc;
  }
  if (acc <= 0.0) throw ZeroBranchError("sampler table has zero total weight");
}

std::uint64_t Sampler::draw(RngStream& rng) const {
  const double u = rng.uniform() * cdf_.back();
  auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  if (it == cdf_.end()) --it;
  return static_cast<std::uint64_t>(it - cdf_.begin());
}

}  // namespace qsim::sim
