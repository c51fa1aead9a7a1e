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

#include "ipsolve/oracle.hpp"

#include "ipsolve/lp.hpp"

namespace ipsolve {

namespace {

void check_box(const IPInstance& inst, const EnumerationBox& box, long long cap) {
  if (box.limits.size() != static_cast<size_t>(inst.n())) {
    throw DimensionMismatch("box size does not match variable count");
  }
  long double size = 1;
  for (long lim : box.limits) {
    if (lim < 0) throw DimensionMismatch("box limits must be nonnegative");
    size *= static_cast<long double>(lim) + 1;
    if (size > static_cast<long double>(cap)) {
      throw BoxTooLarge("enumeration box exceeds the configured cap");
    }
  }
}

// Odometer walk over the box with incremental residual updates. Calls
// visit(x, value) for every x with Ax = b.
template <typename Visit>
void enumerate(const IPInstance& inst, const EnumerationBox& box, Visit visit) {
  const int n = inst.n();
  const int m = inst.m();
  IntVector x(n, Int(0));
  IntVector residual(m, Int(0));  // A x
  Int value(0);                   // c^T x
  for (;;) {
    if (residual == inst.b) visit(x, value);
    int k = 0;
    while (k < n && x[k] == box.limits[k]) {
      value -= inst.c[k] * x[k];
      for (int i = 0; i < m; ++i) residual[i] -= inst.a.at(i, k) * x[k];
      x[k] = 0;
      ++k;
    }
    if (k == n) break;
    x[k] += 1;
    value += inst.c[k];
    for (int i = 0; i < m; ++i) residual[i] += inst.a.at(i, k);
  }
}

}  // namespace

SolveOutcome brute_force_solve(const IPInstance& inst, const EnumerationBox& box,
                               long long cap) {
  check_box(inst, box, cap);
  bool found = false;
  Int best;
  IntVector best_x;
  enumerate(inst, box, [&](const IntVector& x, const Int& value) {
    if (!found || value > best) {
      found = true;
      best = value;
      best_x = x;
    }
  });
  if (!found) return SolveOutcome::infeasible();
  return SolveOutcome::optimal(std::move(best_x), std::move(best));
}

std::vector<IntVector> enumerate_optima(const IPInstance& inst,
                                        const EnumerationBox& box, long long cap) {
  check_box(inst, box, cap);
  std::vector<IntVector> optima;
  Int best;
  enumerate(inst, box, [&](const IntVector& x, const Int& value) {
    if (optima.empty() || value > best) {
      best = value;
      optima.clear();
    }
    if (value == best) optima.push_back(x);
  });
  return optima;
}

bool lp_ray_exists(const IPInstance& inst) {
  LPProblem p;
  p.rows = inst.m();
  p.cols = inst.n();
  p.a.resize(static_cast<size_t>(p.rows) * p.cols);
  for (int i = 0; i < p.rows; ++i)
    for (int j = 0; j < p.cols; ++j) p.at(i, j) = Rat(inst.a.at(i, j));
  p.rhs.assign(p.rows, Rat(0));
  p.objective.reserve(p.cols);
  for (const Int& cj : inst.c) p.objective.emplace_back(cj);
  p.lower.assign(p.cols, Rat(0));
  p.upper.assign(p.cols, Rat(1));
  LPOutcome out = solve_lp(p);
  return out.status == LPStatus::Optimal && out.vertex.objective_value > 0;
}

EnumerationBox default_box(const IPInstance& inst, long fallback) {
  bool nonneg = true;
  Int min_entry(0);
  for (const Int& e : inst.a.data) {
    if (e < 0) nonneg = false;
    Int a = abs(e);
    if (a != 0 && (min_entry == 0 || a < min_entry)) min_entry = a;
  }
  EnumerationBox box;
  if (nonneg && min_entry > 0) {
    Int lim = ceil_rat(make_rat(l1_norm(inst.b), min_entry));
    long l = lim.fits_slong_p() ? lim.get_si() : fallback;
    box.limits.assign(inst.n(), l < 0 ? 0 : l);
  } else {
    box.limits.assign(inst.n(), fallback);
  }
  // Upper bounds always clip the box.
  if (inst.upper) {
    for (int j = 0; j < inst.n(); ++j) {
      const Int& u = (*inst.upper)[j];
      if (u.fits_slong_p() && u.get_si() < box.limits[j]) box.limits[j] = u.get_si();
    }
  }
  return box;
}

}  // namespace ipsolve
