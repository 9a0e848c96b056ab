// Copyright 2026 The Authors.
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

#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>

namespace coordnet {

inline uint64_t SplitMix64(uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Derives a stream seed from a master seed and a tag tuple (agent index,
// learner role, bank slot, ...). Streams with distinct tags are independent,
// so sampling does not depend on agent iteration order or thread schedule.
inline uint64_t DeriveSeed(uint64_t master, std::initializer_list<uint64_t> tags) {
  uint64_t state = master ^ 0x8e2f9d4b1c6a3e57ULL;
  uint64_t out = SplitMix64(state);
  for (uint64_t tag : tags) {
    state ^= tag + 0x9e3779b97f4a7c15ULL + (out << 6) + (out >> 2);
    out = SplitMix64(state);
  }
  return out;
}

// Seedable deterministic stream. All sampling goes through the helpers below;
// std::*_distribution is not used because its output is implementation
// defined and would break bit-identical traces across toolchains.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1) with 53 random bits.
  double NextUnit() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double NextUniform(double lo, double hi) {
    return lo + (hi - lo) * NextUnit();
  }

  // Uniform integer in [0, n).
  int NextIndex(int n) {
    int i = static_cast<int>(NextUnit() * static_cast<double>(n));
    return i < n ? i : n - 1;
  }

  // Inverse-CDF draw from an explicit probability vector.
  int NextFromDistribution(std::span<const double> probs) {
    double u = NextUnit();
    double acc = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
      acc += probs[i];
      if (u < acc) return static_cast<int>(i);
    }
    return static_cast<int>(probs.size()) - 1;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace coordnet
