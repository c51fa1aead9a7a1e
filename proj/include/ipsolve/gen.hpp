// Copyright 2026 The ipsolve Authors
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

#ifndef IPSOLVE_GEN_HPP
#define IPSOLVE_GEN_HPP

#include <cstdint>

#include "ipsolve/core.hpp"

namespace ipsolve {

// SplitMix64. State transition and output mix are fixed so generated
// instances are byte-identical across platforms for a given seed:
//   state += 0x9E3779B97F4A7C15
//   z = state; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform-ish value in [0, bound), bound > 0; next() % bound by definition.
  uint64_t below(uint64_t bound) { return next() % bound; }

  // Integer in [lo, hi] inclusive.
  long range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<uint64_t>(hi - lo + 1)));
  }

 private:
  uint64_t state_;
};

// Deterministic random instance: A entries in [-delta, delta] (A[0][0] is
// forced to delta when no entry attains it), b entries in [-2*delta, 2*delta],
// c entries in [-9, 9], and u entries in [0, 5] when `bounded`.
IPInstance gen_instance(int m, int n, long delta, uint64_t seed, bool bounded);

}  // namespace ipsolve

#endif  // IPSOLVE_GEN_HPP
