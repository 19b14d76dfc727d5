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

#ifndef QSIM_SIM_RNG_HPP_
#define QSIM_SIM_RNG_HPP_

#include <cstdint>
#include <limits>

namespace qsim::sim {

// Counter-based generator: the i-th draw of a stream is a pure function of
// (key, i), so results do not depend on thread scheduling as long as each
// independent unit of work (trial, shot batch) gets its own split stream.
class RngStream {
 public:
  using result_type = std::uint64_t;

  explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next_u64();
  // Uniform on [0, 1) with 53 random bits.
  double uniform();
  bool bernoulli(double p) { return uniform() < p; }
  std::uint64_t binomial(std::uint64_t trials, double p);

  // Child stream; independent of this stream's counter.
  RngStream split(std::uint64_t child) const;

  std::uint64_t key() const { return key_; }
  std::uint64_t draws() const { return counter_; }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()() { return next_u64(); }

 private:
  struct FromKey {};
  RngStream(FromKey, std::uint64_t key) : key_(key) {}

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace qsim::sim

#endif  // QSIM_SIM_RNG_HPP_
