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

#ifndef IPSOLVE_LP_HPP
#define IPSOLVE_LP_HPP

#include <optional>
#include <vector>

#include "ipsolve/core.hpp"
#include "ipsolve/rational.hpp"

namespace ipsolve {

// max objective^T x  s.t.  a x = rhs,  lower <= x <= upper.
// Lower bounds are finite; an absent upper bound means +infinity.
struct LPProblem {
  int rows = 0;
  int cols = 0;
  std::vector<Rat> a;  // row-major, rows x cols
  RatVector rhs;
  RatVector objective;
  RatVector lower;
  std::vector<std::optional<Rat>> upper;

  Rat& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Rat& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

// Basic feasible solution. Nonbasic coordinates sit exactly at a bound, so at
// most `rows` coordinates are strictly between their bounds.
struct LPVertex {
  RatVector point;
  std::vector<int> basis;  // structural basic column indices, ascending
  Rat objective_value;
};

enum class LPStatus { Infeasible, Unbounded, Optimal };

struct LPOutcome {
  LPStatus status = LPStatus::Infeasible;
  LPVertex vertex;  // valid iff status == Optimal
};

// Exact primal simplex, Bland's rule (lowest eligible index entering, lowest
// variable index among minimum-ratio candidates leaving). Deterministic.
LPOutcome solve_lp(const LPProblem& p);

// Phase one only: any vertex of the feasible region, or Infeasible.
LPOutcome feasible_vertex(const LPProblem& p);

// LP relaxation of an integer program: lower = 0, upper = u (or +infinity).
LPProblem relaxation(const IPInstance& inst);

}  // namespace ipsolve

#endif  // IPSOLVE_LP_HPP
