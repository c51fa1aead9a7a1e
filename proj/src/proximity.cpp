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

#include "ipsolve/proximity.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_map>

namespace ipsolve {

Int l1_bound(int m, const Int& delta) {
  Int base = 2 * m * delta + 1;
  Int pow;
  mpz_pow_ui(pow.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(m));
  return m * pow;
}

Int cook_l1_bound(int n, int m, const Int& delta) {
  // ceil(m^(m/2)): exact for even m, rounded-up integer square root otherwise.
  Int mm(m);
  Int root_pow;
  if (m % 2 == 0) {
    mpz_pow_ui(root_pow.get_mpz_t(), mm.get_mpz_t(), static_cast<unsigned long>(m / 2));
  } else {
    Int full;
    mpz_pow_ui(full.get_mpz_t(), mm.get_mpz_t(), static_cast<unsigned long>(m));
    mpz_sqrt(root_pow.get_mpz_t(), full.get_mpz_t());
    if (root_pow * root_pow < full) root_pow += 1;
  }
  Int dpow;
  mpz_pow_ui(dpow.get_mpz_t(), delta.get_mpz_t(), static_cast<unsigned long>(m));
  return Int(n) * Int(n) * root_pow * dpow;
}

Int gap_bound(const Int& c_inf_norm, int m, const Int& delta) {
  if (m == 1) return 2 * c_inf_norm * delta;
  return c_inf_norm * l1_bound(m, delta);
}

ReducedInstance reduce(const IPInstance& inst, const LPVertex& vertex) {
  if (!inst.upper) {
    throw PreconditionViolated("reduce needs an instance with upper bounds");
  }
  const int n = inst.n();
  ReducedInstance red;
  red.base = inst;
  red.l1_budget = l1_bound(inst.m(), inst.delta) + inst.m();
  red.floor_x.resize(n);
  red.lower_star.resize(n);
  red.upper_star.resize(n);
  for (int j = 0; j < n; ++j) {
    red.floor_x[j] = floor_rat(vertex.point[j]);
    red.lower_star[j] = std::min(red.l1_budget, red.floor_x[j]);
    red.upper_star[j] =
        std::min(red.l1_budget, Int((*inst.upper)[j] - red.floor_x[j]));
    if (red.lower_star[j] < 0 || red.upper_star[j] < 0) {
      throw std::logic_error("reduced bounds negative; LP vertex out of box");
    }
  }
  IntVector shift = mat_vec(inst.a, red.floor_x);
  red.rhs.resize(inst.m());
  for (int i = 0; i < inst.m(); ++i) red.rhs[i] = inst.b[i] - shift[i];
  red.objective_offset = dot(inst.c, red.floor_x);
  return red;
}

BinaryExpansionEntry binary_expand(const Int& l, const Int& u) {
  if (l < 0 || u < 0) {
    throw PreconditionViolated("binary_expand needs l, u >= 0");
  }
  BinaryExpansionEntry e;
  e.shift = -l;
  Int range = l + u;
  if (range == 0) return e;
  Int power(1);
  Int covered(0);  // with powers 1..2^(k-1), sums cover {0 .. 2^k - 1}
  while (covered + power <= range) {
    e.coefficients.push_back(power);
    covered += power;
    power *= 2;
  }
  if (covered < range) e.coefficients.push_back(range - covered);
  return e;
}

namespace {

struct PointHash {
  size_t operator()(const IntVector& v) const {
    size_t h = 1469598103934665603ULL;
    for (const Int& e : v) {
      size_t r = mpz_fdiv_ui(e.get_mpz_t(), 0x7fffffffULL);
      if (sgn(e) < 0) r |= 1ULL << 31;
      h = (h ^ r) * 1099511628211ULL;
    }
    return h;
  }
};

struct DagNode {
  IntVector point;
  Int value;
  int parent = -1;  // index in previous layer
  bool took = false;
};

struct Layer {
  std::vector<DagNode> nodes;
  std::unordered_map<IntVector, int, PointHash> index;

  // Keeps the maximum value per point; ties keep the earlier entry.
  void offer(DagNode node) {
    auto it = index.find(node.point);
    if (it == index.end()) {
      index.emplace(node.point, static_cast<int>(nodes.size()));
      nodes.push_back(std::move(node));
    } else if (node.value > nodes[it->second].value) {
      nodes[it->second] = std::move(node);
    }
  }
};

// Arc layers of the DAG, in order: per variable one mandatory shift arc
// followed by its expansion coefficients (descending).
struct ArcLayer {
  int var;
  bool mandatory;
  Int step_count;  // -l for the mandatory arc, the coefficient otherwise
};

}  // namespace

SolveOutcome solve_bounded(const IPInstance& inst, SolveStats* stats) {
  if (!inst.upper) {
    throw PreconditionViolated("solve_bounded needs finite upper bounds");
  }
  const int n = inst.n();
  const int m = inst.m();

  LPOutcome lp = solve_lp(relaxation(inst));
  if (lp.status == LPStatus::Infeasible) return SolveOutcome::infeasible();
  assert(lp.status == LPStatus::Optimal);  // finite box: never unbounded

  ReducedInstance red = reduce(inst, lp.vertex);

  std::vector<ArcLayer> plan;
  for (int j = 0; j < n; ++j) {
    plan.push_back({j, true, -red.lower_star[j]});
    BinaryExpansionEntry e = binary_expand(red.lower_star[j], red.upper_star[j]);
    std::sort(e.coefficients.rbegin(), e.coefficients.rend());
    for (const Int& d : e.coefficients) plan.push_back({j, false, d});
  }
  if (stats) stats->dag_layers = static_cast<long long>(plan.size());

  // All prefix sums of the optimal path stay within this ball.
  const Int radius = inst.delta * (3 * l1_bound(m, inst.delta) + m + 1);

  Layer cur;
  cur.offer({IntVector(m, Int(0)), Int(0), -1, false});
  std::vector<Layer> history;
  history.reserve(plan.size());
  for (const ArcLayer& arc : plan) {
    Layer next;
    for (int idx = 0; idx < static_cast<int>(cur.nodes.size()); ++idx) {
      const DagNode& node = cur.nodes[idx];
      if (!arc.mandatory) {
        next.offer({node.point, node.value, idx, false});  // skip arc
      }
      IntVector to = node.point;
      for (int i = 0; i < m; ++i) to[i] += arc.step_count * inst.a.at(i, arc.var);
      if (linf_norm(to) <= radius) {
        Int w = node.value + inst.c[arc.var] * arc.step_count;
        next.offer({std::move(to), std::move(w), idx, true});
      }
      if (stats) stats->arcs_relaxed += arc.mandatory ? 1 : 2;
    }
    if (stats) stats->nodes_explored += static_cast<long long>(next.nodes.size());
    history.push_back(std::move(cur));
    cur = std::move(next);
    if (cur.nodes.empty()) return SolveOutcome::infeasible();
  }

  auto it = cur.index.find(red.rhs);
  if (it == cur.index.end()) return SolveOutcome::infeasible();

  // Walk the parents back through the layers to recover y, then z.
  IntVector y(n, Int(0));
  int idx = it->second;
  const Layer* layer = &cur;
  for (int k = static_cast<int>(plan.size()) - 1; k >= 0; --k) {
    const DagNode& node = layer->nodes[idx];
    if (node.took) y[plan[k].var] += plan[k].step_count;
    idx = node.parent;
    layer = &history[k];
  }
  IntVector z(n);
  for (int j = 0; j < n; ++j) z[j] = y[j] + red.floor_x[j];
  Int value = dot(inst.c, z);
  return SolveOutcome::optimal(std::move(z), std::move(value));
}

}  // namespace ipsolve
