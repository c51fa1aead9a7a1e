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

#include "ipsolve/knapsack.hpp"

#include <cassert>

#include "ipsolve/dp.hpp"
#include "ipsolve/proximity.hpp"

namespace ipsolve {

KnapsackInstance make_knapsack(IntVector weights, IntVector profits, Int capacity,
                               std::optional<IntVector> upper) {
  if (weights.empty()) throw EmptyInstance("knapsack needs at least one item");
  if (weights.size() != profits.size()) {
    throw DimensionMismatch("weights and profits differ in length");
  }
  if (upper && upper->size() != weights.size()) {
    throw DimensionMismatch("upper bounds differ in length");
  }
  for (const Int& w : weights) {
    if (w < 1) throw PreconditionViolated("knapsack weights must be >= 1");
  }
  if (capacity < 1) throw PreconditionViolated("capacity must be >= 1");
  if (upper) {
    for (const Int& u : *upper) {
      if (u < 0) throw NegativeUpperBound("upper bounds must be nonnegative");
    }
  }
  KnapsackInstance k;
  k.delta_a = linf_norm(weights);
  k.weights = std::move(weights);
  k.profits = std::move(profits);
  k.capacity = std::move(capacity);
  k.upper = std::move(upper);
  return k;
}

IPInstance to_instance(const KnapsackInstance& inst) {
  IntMatrix a(1, static_cast<int>(inst.weights.size()));
  for (size_t j = 0; j < inst.weights.size(); ++j)
    a.at(0, static_cast<int>(j)) = inst.weights[j];
  return validate(std::move(a), {inst.capacity}, inst.profits, inst.upper);
}

KnapsackInstance from_instance(const IPInstance& inst) {
  if (inst.m() != 1) throw PreconditionViolated("knapsack needs m = 1");
  IntVector weights(inst.n());
  for (int j = 0; j < inst.n(); ++j) weights[j] = inst.a.at(0, j);
  return make_knapsack(std::move(weights), inst.c, inst.b[0], inst.upper);
}

SolveOutcome solve_unbounded_knapsack(const KnapsackInstance& inst,
                                      SolveStats* stats) {
  if (inst.upper) {
    for (const Int& u : *inst.upper) {
      if (u != inst.capacity) {
        throw PreconditionViolated(
            "unbounded solver needs no upper bounds (or u = capacity * 1)");
      }
    }
  }
  const int n = static_cast<int>(inst.weights.size());

  // LP vertex: all capacity on the best profit/weight ratio, lowest index
  // on ties.
  int best = 0;
  Rat best_ratio = make_rat(inst.profits[0], inst.weights[0]);
  for (int j = 1; j < n; ++j) {
    Rat r = make_rat(inst.profits[j], inst.weights[j]);
    if (r > best_ratio) {
      best_ratio = r;
      best = j;
    }
  }

  const Int threshold = 2 * inst.delta_a + 1;
  Int q = inst.capacity / inst.weights[best];  // floor: positive operands
  Int shift = q >= threshold ? q - threshold : Int(0);
  Int residual_rhs = inst.capacity - shift * inst.weights[best];

  IntMatrix a(1, n);
  for (int j = 0; j < n; ++j) a.at(0, j) = inst.weights[j];
  IPInstance residual = validate(std::move(a), {residual_rhs}, inst.profits);
  SolveOutcome out = solve_acyclic(residual, stats);
  if (out.status != Status::Optimal) return out;
  out.solution[best] += shift;
  out.value += shift * inst.profits[best];
  return out;
}

SolveOutcome solve_bounded_knapsack(const KnapsackInstance& inst,
                                    SolveStats* stats) {
  if (!inst.upper) {
    throw PreconditionViolated("bounded solver needs upper bounds");
  }
  const int n = static_cast<int>(inst.weights.size());
  IPInstance ip = to_instance(inst);

  LPOutcome lp = solve_lp(relaxation(ip));
  if (lp.status == LPStatus::Infeasible) return SolveOutcome::infeasible();
  assert(lp.status == LPStatus::Optimal);

  ReducedInstance red = reduce(ip, lp.vertex);

  // Shift to nonnegative variables w = y + l*; exact-weight DP over
  // 0..W with binary-split item copies.
  Int target = red.rhs[0];
  for (int j = 0; j < n; ++j) target += inst.weights[j] * red.lower_star[j];
  assert(target >= 0);
  if (!target.fits_ulong_p()) {
    throw std::logic_error("reduced knapsack right-hand side out of range");
  }
  const size_t w_cap = target.get_ui();

  struct Copy {
    int var;
    Int count;
  };
  std::vector<Copy> copies;
  for (int j = 0; j < n; ++j) {
    BinaryExpansionEntry e = binary_expand(Int(0), red.lower_star[j] + red.upper_star[j]);
    for (const Int& d : e.coefficients) copies.push_back({j, d});
  }

  std::vector<std::optional<Int>> dp(w_cap + 1);
  dp[0] = Int(0);
  std::vector<std::vector<bool>> took(copies.size(), std::vector<bool>(w_cap + 1, false));
  for (size_t k = 0; k < copies.size(); ++k) {
    Int item_weight = copies[k].count * inst.weights[copies[k].var];
    if (item_weight > static_cast<long>(w_cap)) continue;
    const size_t w = item_weight.get_ui();
    Int gain = copies[k].count * inst.profits[copies[k].var];
    for (size_t v = w_cap; v >= w; --v) {
      if (!dp[v - w]) continue;
      Int cand = *dp[v - w] + gain;
      if (!dp[v] || cand > *dp[v]) {
        dp[v] = std::move(cand);
        took[k][v] = true;
      }
      if (v == w) break;  // size_t underflow guard
    }
  }
  if (stats) {
    stats->nodes_explored += static_cast<long long>(w_cap + 1);
    stats->arcs_relaxed += static_cast<long long>(copies.size() * (w_cap + 1));
  }
  if (!dp[w_cap]) return SolveOutcome::infeasible();

  IntVector w_sol(n, Int(0));
  size_t v = w_cap;
  for (size_t k = copies.size(); k-- > 0;) {
    if (took[k][v]) {
      w_sol[copies[k].var] += copies[k].count;
      v -= Int(copies[k].count * inst.weights[copies[k].var]).get_ui();
    }
  }
  IntVector z(n);
  for (int j = 0; j < n; ++j) {
    z[j] = w_sol[j] - red.lower_star[j] + red.floor_x[j];
  }
  Int value = dot(inst.profits, z);
  return SolveOutcome::optimal(std::move(z), std::move(value));
}

KnapsackInstance with_slack(const KnapsackInstance& inst) {
  KnapsackInstance k = inst;
  k.weights.push_back(1);
  k.profits.push_back(0);
  if (k.upper) k.upper->push_back(k.capacity);
  return k;
}

}  // namespace ipsolve
