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

#ifndef QSIM_ENCODING_ENCODING_HPP_
#define QSIM_ENCODING_ENCODING_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "qsim/sim/circuit.hpp"
#include "qsim/sim/types.hpp"

namespace qsim::encoding {

enum class Normalization { kAffine, kSqrt };

// values[j] = rho * (raw[j] - eta)             (affine)
// values[j] = rho * sqrt(raw[j] - eta)         (sqrt)
// with rho chosen so that sum(values^2) == 1.
struct NormalizedSeries {
  std::vector<double> values;
  double rho = 1.0;
  double eta = 0.0;
  Normalization kind = Normalization::kAffine;

  std::size_t size() const { return values.size(); }
};

// Positivity of raw - eta is required by every quantum estimator; pass
// require_positive = false only for classical use.
NormalizedSeries normalize_affine(std::span<const double> raw, double eta, bool require_positive = true);
NormalizedSeries normalize_sqrt(std::span<const double> raw, double eta);
NormalizedSeries normalize(std::span<const double> raw, double eta, Normalization kind);

// lg N for a power-of-two N >= 2; throws otherwise.
unsigned log2_exact(std::size_t n);

// Binary tree of partial norms over non-negative leaves. Level 0 is the root,
// level lg N holds the leaves; node(l, i) has children (l+1, 2i), (l+1, 2i+1).
class StateTree {
 public:
  explicit StateTree(std::span<const double> leaves);

  unsigned depth() const { return depth_; }
  std::size_t leaf_count() const { return std::size_t{1} << depth_; }
  std::span<const double> level(unsigned l) const { return levels_.at(l); }
  double node(unsigned l, std::size_t i) const { return levels_.at(l).at(i); }
  // Ry angle that splits node (l, i) into its children, l < depth().
  double angle(unsigned l, std::size_t i) const;

 private:
  unsigned depth_;
  std::vector<std::vector<double>> levels_;
};

enum class LoaderKind { kAmplitude, kBidirectional };

// A state-preparation circuit U with U|0> = the loaded state. `primary` holds
// the data index; everything else in the width is side register.
struct Loader {
  LoaderKind kind = LoaderKind::kAmplitude;
  sim::Circuit forward{0};
  sim::QubitRange primary;
  unsigned split_level = 0;

  unsigned width() const { return forward.width(); }
  sim::Circuit adjoint() const { return forward.inverse(); }
};

// Top-down cascade of uniformly controlled Ry rotations on lg N qubits.
Loader load_amplitude(const StateTree& tree);

// Layout of the bidirectional loader with its copy register:
// [primary | side qubits of the split-level tree | copy of primary].
struct BoeLayout {
  unsigned data_qubits = 0;
  unsigned split_level = 0;
  sim::QubitRange primary;
  sim::QubitRange aux;
  sim::QubitRange copy;
  unsigned width = 0;
};

BoeLayout boe_layout(std::size_t n, unsigned split_level);
unsigned boe_width(std::size_t n, unsigned split_level);
// Reported depth of the bidirectional load plus the CNOT copy.
unsigned boe_depth(std::size_t n, unsigned split_level);

// Bidirectional load at the given split level (1 <= s <= lg N), followed by a
// CNOT copy of the primary register into the trailing lg N qubits, so that the
// side states attached to different data indices are orthonormal.
Loader load_boe(const StateTree& tree, unsigned split_level);

}  // namespace qsim::encoding

#endif  // QSIM_ENCODING_ENCODING_HPP_
