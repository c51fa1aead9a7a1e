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

#ifndef IPSOLVE_KNAPSACK_HPP
#define IPSOLVE_KNAPSACK_HPP

#include <optional>

#include "ipsolve/core.hpp"

namespace ipsolve {

// max profits^T x  s.t.  weights^T x = capacity, x >= 0 integer, optionally
// x <= upper. Weights are strictly positive.
struct KnapsackInstance {
  IntVector weights;
  IntVector profits;
  Int capacity;
  std::optional<IntVector> upper;
  Int delta_a;  // max weight, derived
};

KnapsackInstance make_knapsack(IntVector weights, IntVector profits, Int capacity,
                               std::optional<IntVector> upper = std::nullopt);

// The m = 1 view of an instance, and back.
IPInstance to_instance(const KnapsackInstance& inst);
KnapsackInstance from_instance(const IPInstance& inst);

// Unbounded knapsack via the small-right-hand-side reduction: the LP vertex
// puts everything on the best profit/weight item; all but O(delta_a) copies
// of it are committed up front and the residual is solved by the acyclic DP.
SolveOutcome solve_unbounded_knapsack(const KnapsackInstance& inst,
                                      SolveStats* stats = nullptr);

// Bounded knapsack: proximity reduction around the LP vertex, shift to
// nonnegative variables, then an exact-weight DP with binary-split copies.
SolveOutcome solve_bounded_knapsack(const KnapsackInstance& inst,
                                    SolveStats* stats = nullptr);

// Convenience wrapper turning a <=-capacity problem into the equality form
// by appending a unit-weight zero-profit slack item.
KnapsackInstance with_slack(const KnapsackInstance& inst);

}  // namespace ipsolve

#endif  // IPSOLVE_KNAPSACK_HPP
