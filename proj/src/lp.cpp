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

#include "ipsolve/lp.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace ipsolve {

namespace {

// Dense tableau simplex over exact rationals with box bounds. The tableau
// holds B^{-1} A for all columns (structural + artificial); variable values
// are maintained explicitly and updated on every pivot or bound flip.
class Simplex {
 public:
  explicit Simplex(const LPProblem& p)
      : n_(p.cols), m_(p.rows), total_(p.cols + p.rows) {
    lower_.resize(total_);
    upper_.resize(total_);
    xval_.resize(total_);
    at_upper_.assign(total_, false);
    row_of_.assign(total_, -1);
    cost_.assign(total_, Rat(0));
    tableau_.assign(static_cast<size_t>(m_) * total_, Rat(0));
    basis_.resize(m_);

    for (int j = 0; j < n_; ++j) {
      lower_[j] = p.lower[j];
      upper_[j] = p.upper[j];
      xval_[j] = p.lower[j];
    }
    // Artificial variable per row, signed so its start value is nonnegative.
    for (int i = 0; i < m_; ++i) {
      Rat resid = p.rhs[i];
      for (int j = 0; j < n_; ++j) resid -= p.at(i, j) * p.lower[j];
      Rat sign = resid >= 0 ? Rat(1) : Rat(-1);
      for (int j = 0; j < n_; ++j) t(i, j) = sign * p.at(i, j);
      t(i, n_ + i) = 1;
      lower_[n_ + i] = 0;
      upper_[n_ + i] = std::nullopt;
      xval_[n_ + i] = abs(resid);
      basis_[i] = n_ + i;
      row_of_[n_ + i] = i;
    }
  }

  // Returns false on infeasibility.
  bool phase_one() {
    for (int j = 0; j < total_; ++j) cost_[j] = j < n_ ? Rat(0) : Rat(-1);
    LPStatus s = optimize(/*allow_artificial_entering=*/true);
    assert(s == LPStatus::Optimal);  // phase-1 objective is bounded by zero
    (void)s;
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] >= n_ && xval_[basis_[i]] != 0) return false;
    }
    drive_out_artificials();
    return true;
  }

  LPStatus phase_two(const LPProblem& p) {
    for (int j = 0; j < total_; ++j) cost_[j] = j < n_ ? p.objective[j] : Rat(0);
    return optimize(/*allow_artificial_entering=*/false);
  }

  LPVertex vertex(const RatVector& objective) const {
    LPVertex v;
    v.point.assign(xval_.begin(), xval_.begin() + n_);
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < n_) v.basis.push_back(basis_[i]);
    }
    std::sort(v.basis.begin(), v.basis.end());
    v.objective_value = 0;
    for (int j = 0; j < n_; ++j) v.objective_value += objective[j] * v.point[j];
    return v;
  }

 private:
  Rat& t(int i, int j) { return tableau_[static_cast<size_t>(i) * total_ + j]; }
  const Rat& t(int i, int j) const {
    return tableau_[static_cast<size_t>(i) * total_ + j];
  }

  Rat reduced_cost(int j) const {
    Rat d = cost_[j];
    for (int i = 0; i < m_; ++i) {
      if (cost_[basis_[i]] != 0) d -= cost_[basis_[i]] * t(i, j);
    }
    return d;
  }

  LPStatus optimize(bool allow_artificial_entering) {
    const int limit = allow_artificial_entering ? total_ : n_;
    for (;;) {
      int enter = -1;
      bool from_lower = true;
      for (int j = 0; j < limit; ++j) {
        if (row_of_[j] >= 0) continue;
        if (upper_[j] && lower_[j] == *upper_[j]) continue;  // fixed
        Rat d = reduced_cost(j);
        if (!at_upper_[j] && d > 0) {
          enter = j;
          from_lower = true;
          break;
        }
        if (at_upper_[j] && d < 0) {
          enter = j;
          from_lower = false;
          break;
        }
      }
      if (enter < 0) return LPStatus::Optimal;

      const Rat sigma = from_lower ? Rat(1) : Rat(-1);
      // Ratio test. block_var = -1 means unbounded so far; block_var ==
      // enter means the entering variable hits its own opposite bound.
      std::optional<Rat> step;
      int block_var = -1;
      int block_row = -1;
      if (upper_[enter]) {
        step = *upper_[enter] - lower_[enter];
        block_var = enter;
      }
      for (int i = 0; i < m_; ++i) {
        Rat rate = -sigma * t(i, enter);  // d x_basis[i] / d t
        const int bv = basis_[i];
        Rat cand;
        if (rate < 0) {
          cand = (xval_[bv] - lower_[bv]) / -rate;
        } else if (rate > 0 && upper_[bv]) {
          cand = (*upper_[bv] - xval_[bv]) / rate;
        } else {
          continue;
        }
        if (!step || cand < *step || (cand == *step && bv < block_var)) {
          step = cand;
          block_var = bv;
          block_row = i;
        }
      }
      if (!step) return LPStatus::Unbounded;

      // Apply the move.
      xval_[enter] += sigma * *step;
      for (int i = 0; i < m_; ++i) xval_[basis_[i]] -= sigma * t(i, enter) * *step;

      if (block_var == enter) {
        at_upper_[enter] = !at_upper_[enter];  // bound flip, basis unchanged
        continue;
      }
      const Rat rate = -sigma * t(block_row, enter);
      pivot(block_row, enter, /*leaving_to_upper=*/rate > 0);
    }
  }

  void pivot(int row, int enter, bool leaving_to_upper) {
    const int leave = basis_[row];
    const Rat piv = t(row, enter);
    assert(piv != 0);
    for (int j = 0; j < total_; ++j) t(row, j) /= piv;
    for (int i = 0; i < m_; ++i) {
      if (i == row || t(i, enter) == 0) continue;
      const Rat f = t(i, enter);
      for (int j = 0; j < total_; ++j) {
        if (t(row, j) != 0) t(i, j) -= f * t(row, j);
      }
    }
    basis_[row] = enter;
    row_of_[enter] = row;
    row_of_[leave] = -1;
    at_upper_[leave] = leaving_to_upper;
  }

  // After a feasible phase one, pivot zero-valued artificials out of the
  // basis where a structural column allows it. Rows whose structural part is
  // entirely zero are redundant; their artificial stays basic at value zero
  // and can never move again.
  void drive_out_artificials() {
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      for (int j = 0; j < n_; ++j) {
        if (row_of_[j] < 0 && t(i, j) != 0) {
          pivot(i, j, /*leaving_to_upper=*/false);
          break;
        }
      }
    }
  }

  int n_, m_, total_;
  RatVector lower_;
  std::vector<std::optional<Rat>> upper_;
  RatVector xval_;
  std::vector<bool> at_upper_;
  std::vector<int> row_of_;  // -1 when nonbasic
  RatVector cost_;
  RatVector tableau_;
  std::vector<int> basis_;
};

bool bounds_consistent(const LPProblem& p) {
  for (int j = 0; j < p.cols; ++j) {
    if (p.upper[j] && p.lower[j] > *p.upper[j]) return false;
  }
  return true;
}

}  // namespace

LPOutcome solve_lp(const LPProblem& p) {
  LPOutcome out;
  if (!bounds_consistent(p)) return out;
  Simplex s(p);
  if (!s.phase_one()) return out;
  LPStatus st = s.phase_two(p);
  if (st == LPStatus::Unbounded) {
    out.status = LPStatus::Unbounded;
    return out;
  }
  out.status = LPStatus::Optimal;
  out.vertex = s.vertex(p.objective);
  return out;
}

LPOutcome feasible_vertex(const LPProblem& p) {
  LPOutcome out;
  if (!bounds_consistent(p)) return out;
  Simplex s(p);
  if (!s.phase_one()) return out;
  out.status = LPStatus::Optimal;
  out.vertex = s.vertex(RatVector(p.cols, Rat(0)));
  return out;
}

LPProblem relaxation(const IPInstance& inst) {
  LPProblem p;
  p.rows = inst.m();
  p.cols = inst.n();
  p.a.resize(static_cast<size_t>(p.rows) * p.cols);
  for (int i = 0; i < p.rows; ++i)
    for (int j = 0; j < p.cols; ++j) p.at(i, j) = Rat(inst.a.at(i, j));
  p.rhs.reserve(p.rows);
  for (const Int& bi : inst.b) p.rhs.emplace_back(bi);
  p.objective.reserve(p.cols);
  for (const Int& cj : inst.c) p.objective.emplace_back(cj);
  p.lower.assign(p.cols, Rat(0));
  p.upper.resize(p.cols);
  if (inst.upper) {
    for (int j = 0; j < p.cols; ++j) p.upper[j] = Rat((*inst.upper)[j]);
  }
  return p;
}

}  // namespace ipsolve
