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

#ifndef IPSOLVE_ORACLE_HPP
#define IPSOLVE_ORACLE_HPP

#include <stdexcept>
#include <vector>

#include "ipsolve/core.hpp"

namespace ipsolve {

// Per-variable inclusive enumeration limits.
struct EnumerationBox {
  std::vector<long> limits;
};

class BoxTooLarge : public std::runtime_error {
 public:
  explicit BoxTooLarge(const std::string& what) : std::runtime_error(what) {}
};

constexpr long long kDefaultBoxCap = 10'000'000;

// Exhaustive enumeration of every x in the box with Ax = b. Deliberately
// simple; exists to be obviously correct, not fast.
SolveOutcome brute_force_solve(const IPInstance& inst, const EnumerationBox& box,
                               long long cap = kDefaultBoxCap);

// All optimal solutions within the box (empty when infeasible-in-box).
std::vector<IntVector> enumerate_optima(const IPInstance& inst,
                                        const EnumerationBox& box,
                                        long long cap = kDefaultBoxCap);

// True iff a rational ray r >= 0 with Ar = 0 and c^T r > 0 exists (decided by
// maximizing c^T r over the unit box; rays are scale-invariant).
bool lp_ray_exists(const IPInstance& inst);

// Enumeration box for standard-form comparisons: ceil(l1(b) / min nonzero
// |a_ij|) per coordinate when A >= 0, else `fallback` per coordinate (pair
// the fallback with lp_ray_exists to rule out unboundedness first).
EnumerationBox default_box(const IPInstance& inst, long fallback);

}  // namespace ipsolve

#endif  // IPSOLVE_ORACLE_HPP
