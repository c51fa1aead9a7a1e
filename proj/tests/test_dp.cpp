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

#include <doctest.h>

#include "ipsolve/dp.hpp"
#include "ipsolve/gen.hpp"
#include "ipsolve/oracle.hpp"

using namespace ipsolve;

namespace {

IPInstance instance(int m, int n, std::vector<long> a, std::vector<long> b,
                    std::vector<long> c) {
  IntMatrix mat(m, n);
  for (size_t k = 0; k < a.size(); ++k) mat.data[k] = a[k];
  return validate(std::move(mat), IntVector(b.begin(), b.end()),
                  IntVector(c.begin(), c.end()));
}

IntVector vec(std::vector<long> v) { return IntVector(v.begin(), v.end()); }

}  // namespace

TEST_CASE("tube_contains") {
  TubeSpec any{vec({7, -3}), Int(4)};
  CHECK(tube_contains(vec({0, 0}), any));  // lambda = 0

  TubeSpec spec{vec({5, 0}), Int(4)};
  CHECK(tube_contains(vec({2, 3}), spec));    // lambda = 2/5
  CHECK(!tube_contains(vec({10, 0}), spec));  // min |10 - 5 lambda| = 5
}

TEST_CASE("feasible") {
  auto z = feasible(instance(1, 2, {2, 3}, {5}, {1, 1}));
  REQUIRE(z);
  CHECK(*z == vec({1, 1}));

  auto zero = feasible(instance(2, 2, {1, -4, 0, 2}, {0, 0}, {1, 1}));
  REQUIRE(zero);
  CHECK(*zero == vec({0, 0}));

  CHECK(!feasible(instance(1, 1, {2}, {1}, {1})));
}

TEST_CASE("solve_standard_form") {
  auto opt = solve_standard_form(instance(1, 2, {1, 1}, {3}, {1, 2}));
  REQUIRE(opt.status == Status::Optimal);
  CHECK(opt.solution == vec({0, 3}));
  CHECK(opt.value == 6);

  auto unb = solve_standard_form(instance(1, 2, {1, -1}, {1}, {1, 1}));
  CHECK(unb.status == Status::Unbounded);

  auto zero_obj = solve_standard_form(instance(1, 2, {2, 3}, {5}, {0, 0}));
  REQUIRE(zero_obj.status == Status::Optimal);
  CHECK(zero_obj.value == 0);

  auto inf = solve_standard_form(instance(1, 1, {2}, {1}, {1}));
  CHECK(inf.status == Status::Infeasible);
}

TEST_CASE("solve_acyclic") {
  auto opt = solve_acyclic(instance(2, 2, {1, 2, 0, 1}, {3, 1}, {1, 1}));
  REQUIRE(opt.status == Status::Optimal);
  CHECK(opt.solution == vec({1, 1}));
  CHECK(opt.value == 2);

  auto trivial = solve_acyclic(instance(1, 1, {1}, {0}, {7}));
  REQUIRE(trivial.status == Status::Optimal);
  CHECK(trivial.value == 0);

  // Zero column with positive reward: unbounded once feasible.
  auto unb = solve_acyclic(instance(1, 2, {0, 1}, {2}, {1, 0}));
  CHECK(unb.status == Status::Unbounded);
  // Same column structure but infeasible right-hand side.
  auto inf = solve_acyclic(instance(1, 2, {0, 2}, {1}, {1, 0}));
  CHECK(inf.status == Status::Infeasible);

  CHECK_THROWS_AS(solve_acyclic(instance(1, 2, {1, -1}, {1}, {1, 1})),
                  PreconditionViolated);
}

TEST_CASE("node_count_bound") {
  CHECK(node_count_bound(1, Int(1), vec({5})) == 25);
  CHECK(node_count_bound(1, Int(1), vec({0})) == 5);
  CHECK(node_count_bound(2, Int(1), vec({1, 1})) == 162);  // 9^2 * 2
}

TEST_CASE("dp agrees with the oracle on random instances") {
  SplitMix64 rng(41);
  int checked = 0;
  for (int t = 0; t < 150; ++t) {
    int m = 1 + static_cast<int>(rng.below(2));
    int n = 1 + static_cast<int>(rng.below(3));
    IntMatrix a(m, n);
    for (Int& e : a.data) e = rng.range(-2, 2);
    IntVector b(m), c(n);
    for (Int& e : b) e = rng.range(-3, 3);
    for (Int& e : c) e = rng.range(-2, 2);
    IPInstance inst = validate(std::move(a), std::move(b), std::move(c));

    SolveStats stats;
    SolveOutcome out = solve_standard_form(inst, &stats);
    CHECK(Int(static_cast<long>(stats.nodes_explored)) <= node_count_bound(m, inst.delta, inst.b));
    if (out.status == Status::Unbounded) {
      CHECK(lp_ray_exists(inst));
      continue;
    }
    EnumerationBox box{std::vector<long>(n, 8)};
    if (out.status == Status::Optimal) {
      CHECK(check_optimal(inst, out));
      for (int j = 0; j < n; ++j) {
        if (out.solution[j] > box.limits[j]) box.limits[j] = out.solution[j].get_si();
      }
    }
    SolveOutcome expect = brute_force_solve(inst, box);
    CHECK(out.status == expect.status);
    if (out.status == Status::Optimal) CHECK(out.value == expect.value);
    ++checked;
  }
  CHECK(checked > 30);  // the family must not be all-unbounded
}

TEST_CASE("feasible rejects bounded instances") {
  IPInstance inst = instance(1, 1, {1}, {1}, {1});
  inst.upper = vec({1});
  CHECK_THROWS_AS(feasible(inst), PreconditionViolated);
}
