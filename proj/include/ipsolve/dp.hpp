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

#ifndef IPSOLVE_DP_HPP
#define IPSOLVE_DP_HPP

#include <optional>

#include "ipsolve/core.hpp"

namespace ipsolve {

// The state space of the dynamic programs: lattice points within l-infinity
// distance 2*m*delta of the segment from 0 to b.
struct TubeSpec {
  IntVector b;
  Int radius;  // 2 * m * delta
};

TubeSpec make_tube(const IPInstance& inst);

// True iff some lambda in [0,1] puts x within `radius` of lambda*b in every
// coordinate. Decided exactly by intersecting the per-coordinate lambda
// intervals with [0,1].
bool tube_contains(const IntVector& x, const TubeSpec& spec);

// Feasibility of Ax = b, x >= 0 integer, by breadth-first search over the
// implicit column-step digraph restricted to the tube. Returns a solution or
// absence. Instance must not carry upper bounds.
std::optional<IntVector> feasible(const IPInstance& inst,
                                  SolveStats* stats = nullptr);

// Full solve of the standard-form program: feasibility, then Bellman-Ford
// longest path over the reachable tube nodes with positive-cycle detection
// for unboundedness.
SolveOutcome solve_standard_form(const IPInstance& inst,
                                 SolveStats* stats = nullptr);

// Fast path for A >= 0: the digraph is acyclic (coordinate sums strictly
// increase along arcs), so one pass in topological order suffices. Zero
// columns are stripped first; a zero column with positive cost makes any
// feasible instance unbounded.
SolveOutcome solve_acyclic(const IPInstance& inst, SolveStats* stats = nullptr);

// (4*m*delta + 1)^m * max(l1(b), 1), the tube cardinality guard used by the
// acceptance checks.
Int node_count_bound(int m, const Int& delta, const IntVector& b);

}  // namespace ipsolve

#endif  // IPSOLVE_DP_HPP
