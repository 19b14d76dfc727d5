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

#include "qsim/sim/rng.hpp"

namespace qsim::sim {
namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// splitmix64 finalizer.
std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t derive(std::uint64_t parent, std::uint64_t child) {
  return mix(parent ^ mix(child * kGolden + 0x632BE59BD9B4E019ULL));
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream)
    : key_(derive(mix(seed + kGolden), stream)) {}

std::uint64_t RngStream::next_u64() {
  const std::uint64_t c = counter_++;
  return mix(key_ + (c + 1) * kGolden);
}

double RngStream::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t RngStream::binomial(std::uint64_t trials, double p) {
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < trials; ++i) hits += bernoulli(p) ? 1 : 0;
  return hits;
}

RngStream RngStream::split(std::uint64_t child) const {
  return RngStream(FromKey{}, derive(key_, child));
}

}  // namespace qsim::sim
