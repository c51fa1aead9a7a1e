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

#ifndef IPSOLVE_CORE_HPP
#define IPSOLVE_CORE_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ipsolve/rational.hpp"

namespace ipsolve {

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

class DimensionMismatch : public ValidationError {
 public:
  explicit DimensionMismatch(const std::string& what) : ValidationError(what) {}
};

class NegativeUpperBound : public ValidationError {
 public:
  explicit NegativeUpperBound(const std::string& what) : ValidationError(what) {}
};

class EmptyInstance : public ValidationError {
 public:
  explicit EmptyInstance(const std::string& what) : ValidationError(what) {}
};

class PreconditionViolated : public std::runtime_error {
 public:
  explicit PreconditionViolated(const std::string& what) : std::runtime_error(what) {}
};

// Dense row-major integer matrix.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Int> data;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c) {}

  Int& at(int i, int j) { return data[static_cast<size_t>(i) * cols + j]; }
  const Int& at(int i, int j) const { return data[static_cast<size_t>(i) * cols + j]; }

  IntVector column(int j) const {
    IntVector v(rows);
    for (int i = 0; i < rows; ++i) v[i] = at(i, j);
    return v;
  }
};

// The problem tuple (A, b, c, optional u). delta is always recomputed from A.
struct IPInstance {
  IntMatrix a;
  IntVector b;
  IntVector c;
  std::optional<IntVector> upper;
  Int delta;

  int m() const { return a.rows; }
  int n() const { return a.cols; }
};

// Canonicalizes and checks raw instance data.
IPInstance validate(IntMatrix a, IntVector b, IntVector c,
                    std::optional<IntVector> upper = std::nullopt);

Int l1_norm(const IntVector& v);
Int linf_norm(const IntVector& v);

IntVector mat_vec(const IntMatrix& a, const IntVector& x);
Int dot(const IntVector& a, const IntVector& b);

enum class Status { Infeasible, Unbounded, Optimal };

struct SolveOutcome {
  Status status = Status::Infeasible;
  IntVector solution;  // valid iff status == Optimal
  Int value;           // valid iff status == Optimal

  static SolveOutcome infeasible() { return {}; }
  static SolveOutcome unbounded() {
    SolveOutcome o;
    o.status = Status::Unbounded;
    return o;
  }
  static SolveOutcome optimal(IntVector x, Int value) {
    SolveOutcome o;
    o.status = Status::Optimal;
    o.solution = std::move(x);
    o.value = std::move(value);
    return o;
  }
};

// Per-solve counters, filled in by the dynamic programs.
struct SolveStats {
  long long nodes_explored = 0;
  long long arcs_relaxed = 0;
  long long dag_layers = 0;
};

// Exact feasibility check of an Optimal outcome against its instance.
bool check_optimal(const IPInstance& inst, const SolveOutcome& out);

}  // namespace ipsolve

#endif  // IPSOLVE_CORE_HPP
