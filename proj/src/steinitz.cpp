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

#include "ipsolve/steinitz.hpp"

#include <numeric>
#include <stdexcept>

#include "ipsolve/lp.hpp"

namespace ipsolve {

RearrangementInput make_rearrangement_input(std::vector<RatVector> vectors) {
  if (vectors.empty()) throw InvalidInput("need at least one vector");
  RearrangementInput in;
  in.dim = static_cast<int>(vectors[0].size());
  if (in.dim < 1) throw InvalidInput("vectors must have dimension >= 1");
  RatVector sum(in.dim, Rat(0));
  in.norm_bound = 0;
  for (const RatVector& v : vectors) {
    if (static_cast<int>(v.size()) != in.dim) {
      throw InvalidInput("vectors must all have the same dimension");
    }
    for (int i = 0; i < in.dim; ++i) {
      sum[i] += v[i];
      Rat a = abs(v[i]);
      if (a > in.norm_bound) in.norm_bound = a;
    }
  }
  for (const Rat& s : sum) {
    if (s != 0) throw InvalidInput("vectors must sum to zero exactly");
  }
  in.vectors = std::move(vectors);
  return in;
}

namespace {

void check_input(const RearrangementInput& input) {
  RatVector sum(input.dim, Rat(0));
  for (const RatVector& v : input.vectors) {
    if (static_cast<int>(v.size()) != input.dim) {
      throw InvalidInput("vector dimension mismatch");
    }
    for (int i = 0; i < input.dim; ++i) {
      sum[i] += v[i];
      if (abs(v[i]) > input.norm_bound) {
        throw InvalidInput("vector exceeds norm_bound");
      }
    }
  }
  for (const Rat& s : sum) {
    if (s != 0) throw InvalidInput("vectors must sum to zero exactly");
  }
}

// Carrier system over the active index set: sum lambda_i x_i = 0,
// sum lambda_i = target, 0 <= lambda <= 1.
LPProblem carrier_system(const std::vector<RatVector>& vectors,
                         const std::vector<int>& active, int dim,
                         const Rat& target) {
  LPProblem p;
  p.rows = dim + 1;
  p.cols = static_cast<int>(active.size());
  p.a.assign(static_cast<size_t>(p.rows) * p.cols, Rat(0));
  for (int k = 0; k < p.cols; ++k) {
    for (int i = 0; i < dim; ++i) p.at(i, k) = vectors[active[k]][i];
    p.at(dim, k) = 1;
  }
  p.rhs.assign(dim, Rat(0));
  p.rhs.push_back(target);
  p.objective.assign(p.cols, Rat(0));
  p.lower.assign(p.cols, Rat(0));
  p.upper.assign(p.cols, Rat(1));
  return p;
}

}  // namespace

Permutation steinitz_reorder(const RearrangementInput& input) {
  check_input(input);
  const int n = static_cast<int>(input.vectors.size());
  const int m = input.dim;

  Permutation order(n);
  std::iota(order.begin(), order.end(), 0);
  if (n <= m) return order;  // triangle inequality already gives the bound

  std::vector<int> active(n);
  std::iota(active.begin(), active.end(), 0);

  // Shrink A_k to A_{k-1} for k = n..m+1; the removed index takes position
  // k-1 (0-based). The survivors fill positions 0..m-1 in ascending order.
  for (int k = n; k > m; --k) {
    LPOutcome out =
        feasible_vertex(carrier_system(input.vectors, active, m, Rat(k - 1 - m)));
    if (out.status != LPStatus::Optimal) {
      throw std::logic_error("carrier system unexpectedly infeasible");
    }
    int drop = -1;
    for (size_t i = 0; i < out.vertex.point.size(); ++i) {
      if (out.vertex.point[i] == 0) {
        drop = static_cast<int>(i);
        break;
      }
    }
    if (drop < 0) {
      throw std::logic_error("carrier vertex has no zero coordinate");
    }
    order[k - 1] = active[drop];
    active.erase(active.begin() + drop);
  }
  for (int i = 0; i < m; ++i) order[i] = active[i];
  return order;
}

Rat max_prefix_norm(const std::vector<RatVector>& vectors,
                    const Permutation& order, Norm norm) {
  if (order.size() != vectors.size()) {
    throw InvalidInput("permutation length mismatch");
  }
  const int dim = vectors.empty() ? 0 : static_cast<int>(vectors[0].size());
  RatVector prefix(dim, Rat(0));
  Rat best(0);
  for (int idx : order) {
    Rat cur(0);
    for (int i = 0; i < dim; ++i) {
      prefix[i] += vectors[idx][i];
      if (norm == Norm::LInf) {
        Rat a = abs(prefix[i]);
        if (a > cur) cur = a;
      } else {
        cur += abs(prefix[i]);
      }
    }
    if (cur > best) best = cur;
  }
  return best;
}

}  // namespace ipsolve
