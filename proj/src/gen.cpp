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

#include "ipsolve/gen.hpp"

namespace ipsolve {

IPInstance gen_instance(int m, int n, long delta, uint64_t seed, bool bounded) {
  if (m < 1 || n < 1 || delta < 0) {
    throw PreconditionViolated("gen needs m, n >= 1 and delta >= 0");
  }
  SplitMix64 rng(seed);
  IntMatrix a(m, n);
  bool attained = delta == 0;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      long e = rng.range(-delta, delta);
      if (e == delta || e == -delta) attained = true;
      a.at(i, j) = e;
    }
  }
  if (!attained) a.at(0, 0) = delta;
  IntVector b(m), c(n);
  for (int i = 0; i < m; ++i) b[i] = rng.range(-2 * delta, 2 * delta);
  for (int j = 0; j < n; ++j) c[j] = rng.range(-9, 9);
  std::optional<IntVector> upper;
  if (bounded) {
    IntVector u(n);
    for (int j = 0; j < n; ++j) u[j] = rng.range(0, 5);
    upper = std::move(u);
  }
  return validate(std::move(a), std::move(b), std::move(c), std::move(upper));
}

}  // namespace ipsolve
