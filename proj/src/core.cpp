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

#include "ipsolve/core.hpp"

namespace ipsolve {

IPInstance validate(IntMatrix a, IntVector b, IntVector c,
                    std::optional<IntVector> upper) {
  if (a.rows < 1 || a.cols < 1) {
    throw EmptyInstance("instance needs m >= 1 and n >= 1");
  }
  if (a.data.size() != static_cast<size_t>(a.rows) * a.cols) {
    throw DimensionMismatch("matrix storage does not match declared dimensions");
  }
  if (b.size() != static_cast<size_t>(a.rows)) {
    throw DimensionMismatch("b has length " + std::to_string(b.size()) +
                            ", expected " + std::to_string(a.rows));
  }
  if (c.size() != static_cast<size_t>(a.cols)) {
    throw DimensionMismatch("c has length " + std::to_string(c.size()) +
                            ", expected " + std::to_string(a.cols));
  }
  if (upper) {
    if (upper->size() != static_cast<size_t>(a.cols)) {
      throw DimensionMismatch("u has length " + std::to_string(upper->size()) +
                              ", expected " + std::to_string(a.cols));
    }
    for (const Int& u : *upper) {
      if (u < 0) throw NegativeUpperBound("upper bounds must be nonnegative");
    }
  }
  IPInstance inst;
  inst.a = std::move(a);
  inst.b = std::move(b);
  inst.c = std::move(c);
  inst.upper = std::move(upper);
  inst.delta = 0;
  for (const Int& e : inst.a.data) {
    Int ab = abs(e);
    if (ab > inst.delta) inst.delta = ab;
  }
  return inst;
}

Int l1_norm(const IntVector& v) {
  Int s = 0;
  for (const Int& e : v) s += abs(e);
  return s;
}

Int linf_norm(const IntVector& v) {
  Int s = 0;
  for (const Int& e : v) {
    Int ab = abs(e);
    if (ab > s) s = ab;
  }
  return s;
}

IntVector mat_vec(const IntMatrix& a, const IntVector& x) {
  IntVector r(a.rows, Int(0));
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) r[i] += a.at(i, j) * x[j];
  return r;
}

Int dot(const IntVector& a, const IntVector& b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool check_optimal(const IPInstance& inst, const SolveOutcome& out) {
  if (out.status != Status::Optimal) return false;
  if (out.solution.size() != static_cast<size_t>(inst.n())) return false;
  for (int j = 0; j < inst.n(); ++j) {
    if (out.solution[j] < 0) return false;
    if (inst.upper && out.solution[j] > (*inst.upper)[j]) return false;
  }
  if (mat_vec(inst.a, out.solution) != inst.b) return false;
  return dot(inst.c, out.solution) == out.value;
}

}  // namespace ipsolve
