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

#ifndef QSIM_SIM_STATEVECTOR_HPP_
#define QSIM_SIM_STATEVECTOR_HPP_

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "qsim/sim/rng.hpp"
#include "qsim/sim/types.hpp"

namespace qsim::sim {

class Statevector;

struct MeasureResult {
  std::uint64_t outcome = 0;
  double probability = 0.0;
};

// Dense state over `n` qubits. Basis index bit q is qubit q.
class Statevector {
 public:
  static constexpr unsigned kMaxQubits = 30;

  explicit Statevector(unsigned n_qubits);
  static Statevector from_amplitudes(std::vector<cplx> amplitudes);

  unsigned n_qubits() const { return n_; }
  std::size_t size() const { return amps_.size(); }
  std::span<const cplx> amplitudes() const { return amps_; }
  std::span<cplx> amplitudes() { return amps_; }
  cplx operator[](std::size_t i) const { return amps_[i]; }

  double norm_squared() const;
  void normalize();

  void apply_single_qubit(unsigned target, const Matrix2& u,
                          std::span<const Control> controls = {});
  // CNOT from controls[i] onto targets[i]; the two registers must not overlap.
  void apply_cnot_layer(const Register& controls, const Register& targets);
  void apply_cnot_layer(QubitRange controls, QubitRange targets);
  void apply_multi_controlled_x(std::span<const Control> controls, unsigned target);
  void controlled_swap(unsigned control, const Register& a, const Register& b);
  // I - 2|0><0| restricted to `reg` (identity on the other qubits).
  void reflect_zero(const Register& reg);
  // Sign flip on every basis state whose `qubit` is 1.
  void phase_flip_one(unsigned qubit);

  double probability(const Register& reg, std::uint64_t value) const;
  std::vector<double> marginal(const Register& reg) const;

  MeasureResult measure(const Register& reg, RngStream& rng);
  // Projects onto reg == value and renormalizes; returns the branch weight.
  double project(const Register& reg, std::uint64_t value);
  // Projects and removes the register; surviving qubits keep their relative
  // order.
  std::pair<double, Statevector> postselect(const Register& reg, std::uint64_t value) const;
  void reset(const Register& reg, RngStream& rng);

  std::map<std::uint64_t, std::uint64_t> sample_counts(std::uint64_t shots, RngStream& rng) const;

  cplx inner(const Statevector& other) const;

 private:
  unsigned n_;
  std::vector<cplx> amps_;
};

std::uint64_t register_value(std::uint64_t basis_index, const Register& reg);
std::uint64_t register_mask(const Register& reg);

// Draws basis indices from a fixed probability table by inverse CDF.
class Sampler {
 public:
  explicit Sampler(std::span<const double> probabilities);
  std::uint64_t draw(RngStream& rng) const;
  std::size_t size() const { return cdf_.size(); }

 private:
  std::vector<double> cdf_;
};

}  // namespace qsim::sim

#endif  // QSIM_SIM_STATEVECTOR_HPP_
