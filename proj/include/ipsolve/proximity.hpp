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

#ifndef IPSOLVE_PROXIMITY_HPP
#define IPSOLVE_PROXIMITY_HPP

#include "ipsolve/core.hpp"
#include "ipsolve/lp.hpp"

namespace ipsolve {

// m * (2*m*delta + 1)^m: l1 distance between an optimal LP vertex and some
// optimal integer solution.
Int l1_bound(int m, const Int& delta);

// n^2 * ceil(m^(m/2)) * delta^m: the classical determinant-based l1 bound,
// reported for comparison.
Int cook_l1_bound(int n, int m, const Int& delta);

// Absolute integrality gap bound: 2*|c|_inf*delta for m = 1, else
// |c|_inf * l1_bound(m, delta).
Int gap_bound(const Int& c_inf_norm, int m, const Int& delta);

// The problem after the variable shift y = z - floor(x*). Any optimal y maps
// back via z = y + floor_x with value + objective_offset.
struct ReducedInstance {
  IPInstance base;       // columns and costs reused from the original
  IntVector rhs;         // b - A*floor_x
  IntVector floor_x;
  IntVector lower_star;  // y >= -lower_star
  IntVector upper_star;  // y <= upper_star
  Int l1_budget;         // l1_bound + m (slack for the floor rounding)
  Int objective_offset;  // c^T floor_x
};

ReducedInstance reduce(const IPInstance& inst, const LPVertex& vertex);

// shift + sum of chosen coefficients covers exactly {-l, ..., u}.
struct BinaryExpansionEntry {
  Int shift;  // -l
  IntVector coefficients;
};

// Binary split of l+u: powers 1, 2, ..., 2^(k-1) plus the remainder, for the
// largest k with 2^k - 1 <= l+u.
BinaryExpansionEntry binary_expand(const Int& l, const Int& u);

// Solver for instances with finite upper bounds: exact LP vertex, proximity
// reduction, binary variable expansion, longest path in a layered DAG.
SolveOutcome solve_bounded(const IPInstance& inst, SolveStats* stats = nullptr);

}  // namespace ipsolve

#endif  // IPSOLVE_PROXIMITY_HPP
