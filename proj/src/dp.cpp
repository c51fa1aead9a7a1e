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

#include "ipsolve/dp.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace ipsolve {

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

// State set actually explored: a refinement of the coarse radius-2mD tube.
// A feasible solution using t columns, reordered by the rearrangement
// guarantee, has prefix sums p_j with
//   |p_j - (j/t) b|_inf <= m * (delta + |b|_inf / t),
// j/t <= 1 - 1/t for j < t, and 1/t <= min(1, delta/|b|_inf) since t columns
// bounded by delta must reach b. Relaxing (j/t, 1/t) to reals (lambda, tau)
// keeps every such prefix sum while trimming the coarse tube's overshoot
// past its endpoints, which is what keeps the explored-node count within
// the closed-form bound.
struct StateSpace {
  IntVector b;
  Rat r0;       // m * delta
  Rat r1;       // m * |b|_inf
  Rat tau_max;  // min(1, delta / |b|_inf); meaningless when b = 0
  bool b_zero;
};

StateSpace make_state_space(const IPInstance& inst) {
  StateSpace s;
  s.b = inst.b;
  const int m = inst.m();
  s.r0 = Rat(m * inst.delta);
  Int binf = linf_norm(inst.b);
  s.b_zero = binf == 0;
  if (!s.b_zero) {
    s.r1 = Rat(m * binf);
    s.tau_max = make_rat(inst.delta, binf);
    if (s.tau_max > 1) s.tau_max = 1;
  }
  return s;
}

// c0 + c1 * tau.
struct Line {
  Rat c0, c1;
  Rat at(const Rat& tau) const { return c0 + c1 * tau; }
};

// Feasibility of the two-variable system above. The lambda window width is
// concave piecewise-linear in tau, so its maximum sits at an endpoint or at
// a crossing of two window-edge lines; checking those points is exact.
bool state_member(const IntVector& x, const StateSpace& s) {
  if (x == s.b) return true;
  if (s.b_zero) return Rat(linf_norm(x)) <= s.r0;
  Rat tau_lo(0);
  std::vector<Line> uppers{{Rat(1), Rat(-1)}};  // lambda <= 1 - tau
  std::vector<Line> lowers{{Rat(0), Rat(0)}};   // lambda >= 0
  for (size_t i = 0; i < x.size(); ++i) {
    const Int& bi = s.b[i];
    if (bi == 0) {
      Rat need = (Rat(abs(x[i])) - s.r0) / s.r1;
      if (need > tau_lo) tau_lo = need;
      continue;
    }
    Line lo{(Rat(x[i]) - s.r0) / Rat(bi), -s.r1 / Rat(bi)};
    Line hi{(Rat(x[i]) + s.r0) / Rat(bi), s.r1 / Rat(bi)};
    if (bi < 0) std::swap(lo, hi);
    lowers.push_back(lo);
    uppers.push_back(hi);
  }
  if (tau_lo > s.tau_max) return false;
  std::vector<Rat> candidates{tau_lo, s.tau_max};
  auto crossings = [&](const std::vector<Line>& lines) {
    for (size_t a = 0; a < lines.size(); ++a) {
      for (size_t b = a + 1; b < lines.size(); ++b) {
        if (lines[a].c1 == lines[b].c1) continue;
        Rat tau = (lines[b].c0 - lines[a].c0) / (lines[a].c1 - lines[b].c1);
        if (tau >= tau_lo && tau <= s.tau_max) candidates.push_back(tau);
      }
    }
  };
  crossings(uppers);
  crossings(lowers);
  for (const Rat& tau : candidates) {
    Rat hi = uppers[0].at(tau);
    for (size_t k = 1; k < uppers.size(); ++k) {
      Rat v = uppers[k].at(tau);
      if (v < hi) hi = v;
    }
    Rat lo = lowers[0].at(tau);
    for (size_t k = 1; k < lowers.size(); ++k) {
      Rat v = lowers[k].at(tau);
      if (v > lo) lo = v;
    }
    if (lo <= hi) return true;
  }
  return false;
}

// Lazily discovered reachable portion of the state digraph. Node ids are BFS
// discovery order; the origin is id 0.
struct Reach {
  std::vector<IntVector> points;
  std::unordered_map<IntVector, int, PointHash> index;
  std::vector<int> bfs_parent;
  std::vector<int> bfs_arc;
};

Reach explore(const IPInstance& inst, const StateSpace& tube,
              const IntVector* stop_at = nullptr) {
  Reach r;
  const int m = inst.m();
  const int n = inst.n();
  IntVector origin(m, Int(0));
  r.points.push_back(origin);
  r.index.emplace(origin, 0);
  r.bfs_parent.push_back(-1);
  r.bfs_arc.push_back(-1);
  for (size_t head = 0; head < r.points.size(); ++head) {
    if (stop_at && r.points[head] == *stop_at) break;
    const IntVector cur = r.points[head];  // copy: points may reallocate
    for (int j = 0; j < n; ++j) {
      IntVector next = cur;
      for (int i = 0; i < m; ++i) next[i] += inst.a.at(i, j);
      if (r.index.count(next) || !state_member(next, tube)) continue;
      r.index.emplace(next, static_cast<int>(r.points.size()));
      r.points.push_back(std::move(next));
      r.bfs_parent.push_back(static_cast<int>(head));
      r.bfs_arc.push_back(j);
    }
  }
  return r;
}

IntVector reconstruct(int n, const std::vector<int>& parent,
                      const std::vector<int>& arc, int node) {
  IntVector x(n, Int(0));
  while (parent[node] >= 0) {
    x[arc[node]] += 1;
    node = parent[node];
  }
  return x;
}

void require_standard_form(const IPInstance& inst) {
  if (inst.upper) {
    throw PreconditionViolated(
        "standard-form DP does not take upper bounds; use the bounded solver");
  }
}

}  // namespace

TubeSpec make_tube(const IPInstance& inst) {
  return TubeSpec{inst.b, 2 * inst.m() * inst.delta};
}

bool tube_contains(const IntVector& x, const TubeSpec& spec) {
  // Intersect the per-coordinate intervals {lambda : |x_i - lambda b_i| <= r}
  // with [0,1].
  Rat lo(0), hi(1);
  for (size_t i = 0; i < x.size(); ++i) {
    const Int& bi = spec.b[i];
    if (bi == 0) {
      if (abs(x[i]) > spec.radius) return false;
      continue;
    }
    Rat a = make_rat(x[i] - spec.radius, bi);
    Rat b = make_rat(x[i] + spec.radius, bi);
    if (bi < 0) std::swap(a, b);
    if (a > lo) lo = a;
    if (b < hi) hi = b;
    if (lo > hi) return false;
  }
  return true;
}

std::optional<IntVector> feasible(const IPInstance& inst, SolveStats* stats) {
  require_standard_form(inst);
  if (linf_norm(inst.b) == 0) return IntVector(inst.n(), Int(0));
  StateSpace tube = make_state_space(inst);
  Reach r = explore(inst, tube, &inst.b);
  if (stats) stats->nodes_explored = static_cast<long long>(r.points.size());
  auto it = r.index.find(inst.b);
  if (it == r.index.end()) return std::nullopt;
  return reconstruct(inst.n(), r.bfs_parent, r.bfs_arc, it->second);
}

SolveOutcome solve_standard_form(const IPInstance& inst, SolveStats* stats) {
  require_standard_form(inst);
  const int n = inst.n();
  StateSpace tube = make_state_space(inst);
  Reach r = explore(inst, tube);
  const int count = static_cast<int>(r.points.size());
  if (stats) stats->nodes_explored = count;

  auto target = r.index.find(inst.b);
  bool b_is_zero = linf_norm(inst.b) == 0;
  if (target == r.index.end() && !b_is_zero) return SolveOutcome::infeasible();
  const int target_id = b_is_zero ? 0 : target->second;

  // Precompute arc lists: node id -> (successor id per column, or -1).
  std::vector<std::vector<int>> succ(count, std::vector<int>(n, -1));
  for (int id = 0; id < count; ++id) {
    for (int j = 0; j < n; ++j) {
      IntVector next = r.points[id];
      for (int i = 0; i < inst.m(); ++i) next[i] += inst.a.at(i, j);
      auto it = r.index.find(next);
      if (it != r.index.end()) succ[id][j] = it->second;
    }
  }

  // Bellman-Ford longest path from the origin, arcs in (node id, column)
  // order. If values still improve after `count` passes, a strictly positive
  // cycle is reachable and the feasible program is unbounded.
  std::vector<std::optional<Int>> dist(count);
  std::vector<int> pred_node(count, -1), pred_arc(count, -1);
  dist[0] = Int(0);
  bool improved = true;
  int pass = 0;
  while (improved && pass <= count) {
    improved = false;
    ++pass;
    for (int id = 0; id < count; ++id) {
      if (!dist[id]) continue;
      for (int j = 0; j < n; ++j) {
        const int to = succ[id][j];
        if (to < 0) continue;
        Int cand = *dist[id] + inst.c[j];
        if (!dist[to] || cand > *dist[to]) {
          dist[to] = cand;
          pred_node[to] = id;
          pred_arc[to] = j;
          improved = true;
          if (stats) ++stats->arcs_relaxed;
        }
      }
    }
  }
  if (improved) return SolveOutcome::unbounded();

  IntVector x(n, Int(0));
  for (int node = target_id; pred_node[node] >= 0; node = pred_node[node]) {
    x[pred_arc[node]] += 1;
  }
  Int value = dot(inst.c, x);
  return SolveOutcome::optimal(std::move(x), std::move(value));
}

SolveOutcome solve_acyclic(const IPInstance& inst, SolveStats* stats) {
  require_standard_form(inst);
  for (const Int& e : inst.a.data) {
    if (e < 0) {
      throw PreconditionViolated("acyclic solver requires A >= 0");
    }
  }
  const int n = inst.n();
  const int m = inst.m();

  // Strip zero columns. A zero column with positive reward makes any
  // feasible instance unbounded; nonpositive ones can be fixed to zero.
  std::vector<int> keep;
  bool free_reward = false;
  for (int j = 0; j < n; ++j) {
    bool zero = true;
    for (int i = 0; i < m; ++i) {
      if (inst.a.at(i, j) != 0) zero = false;
    }
    if (!zero) {
      keep.push_back(j);
    } else if (inst.c[j] > 0) {
      free_reward = true;
    }
  }

  if (keep.empty()) {
    if (linf_norm(inst.b) != 0) return SolveOutcome::infeasible();
    if (free_reward) return SolveOutcome::unbounded();
    return SolveOutcome::optimal(IntVector(n, Int(0)), Int(0));
  }

  IPInstance sub;
  sub.a = IntMatrix(m, static_cast<int>(keep.size()));
  sub.c.resize(keep.size());
  for (size_t k = 0; k < keep.size(); ++k) {
    for (int i = 0; i < m; ++i) sub.a.at(i, static_cast<int>(k)) = inst.a.at(i, keep[k]);
    sub.c[k] = inst.c[keep[k]];
  }
  sub.b = inst.b;
  sub.delta = inst.delta;

  StateSpace tube = make_state_space(sub);
  Reach r = explore(sub, tube);
  const int count = static_cast<int>(r.points.size());
  if (stats) stats->nodes_explored = count;

  auto target = r.index.find(sub.b);
  bool b_is_zero = linf_norm(sub.b) == 0;
  if (target == r.index.end() && !b_is_zero) return SolveOutcome::infeasible();
  const int target_id = b_is_zero ? 0 : target->second;

  // Topological order: coordinate sums strictly increase along arcs because
  // every kept column is nonnegative and nonzero.
  std::vector<int> order(count);
  std::iota(order.begin(), order.end(), 0);
  std::vector<Int> coord_sum(count, Int(0));
  for (int id = 0; id < count; ++id) {
    for (const Int& e : r.points[id]) coord_sum[id] += e;
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](int u, int v) { return coord_sum[u] < coord_sum[v]; });

  const int nk = static_cast<int>(keep.size());
  std::vector<std::optional<Int>> dist(count);
  std::vector<int> pred_node(count, -1), pred_arc(count, -1);
  dist[0] = Int(0);
  for (int u : order) {
    if (!dist[u]) continue;
    for (int j = 0; j < nk; ++j) {
      IntVector next = r.points[u];
      for (int i = 0; i < m; ++i) next[i] += sub.a.at(i, j);
      auto it = r.index.find(next);
      if (it == r.index.end()) continue;
      const int to = it->second;
      Int cand = *dist[u] + sub.c[j];
      if (!dist[to] || cand > *dist[to]) {
        dist[to] = cand;
        pred_node[to] = u;
        pred_arc[to] = j;
        if (stats) ++stats->arcs_relaxed;
      }
    }
  }
  if (!dist[target_id]) return SolveOutcome::infeasible();
  if (free_reward) return SolveOutcome::unbounded();

  IntVector x(n, Int(0));
  for (int node = target_id; pred_node[node] >= 0; node = pred_node[node]) {
    x[keep[pred_arc[node]]] += 1;
  }
  Int value = dot(inst.c, x);
  return SolveOutcome::optimal(std::move(x), std::move(value));
}

Int node_count_bound(int m, const Int& delta, const IntVector& b) {
  Int base = 4 * m * delta + 1;
  Int pow;
  mpz_pow_ui(pow.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(m));
  Int t = l1_norm(b);
  if (t < 1) t = 1;
  return pow * t;
}

}  // namespace ipsolve
