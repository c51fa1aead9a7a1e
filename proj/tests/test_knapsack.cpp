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

#include "ipsolve/gen.hpp"
#include "ipsolve/knapsack.hpp"
#include "ipsolve/oracle.hpp"
#include "ipsolve/proximity.hpp"

using namespace ipsolve;

namespace {

IntVector vec(std::vector<long> v) { return IntVector(v.begin(), v.end()); }

}  // namespace

TEST_CASE("make_knapsack validation") {
  CHECK_THROWS_AS(make_knapsack({}, {}, Int(1)), EmptyInstance);
  CHECK_THROWS_AS(make_knapsack(vec({1, 2}), vec({1}), Int(1)),
                  DimensionMismatch);
  CHECK_THROWS_AS(make_knapsack(vec({0}), vec({1}), Int(1)),
                  PreconditionViolated);
  CHECK_THROWS_AS(make_knapsack(vec({1}), vec({1}), Int(0)),
                  PreconditionViolated);
  CHECK_THROWS_AS(make_knapsack(vec({1}), vec({1}), Int(1), vec({-1})),
                  NegativeUpperBound);

  auto k = make_knapsack(vec({2, 5}), vec({1, 1}), Int(7));
  CHECK(k.delta_a == 5);
}

TEST_CASE("instance round trip") {
  auto k = make_knapsack(vec({2, 3}), vec({1, 4}), Int(7), vec({3, 2}));
  IPInstance ip = to_instance(k);
  CHECK(ip.m() == 1);
  CHECK(ip.delta == 3);
  auto back = from_instance(ip);
  CHECK(back.weights == k.weights);
  CHECK(back.profits == k.profits);
  CHECK(back.capacity == k.capacity);
  CHECK(back.upper == k.upper);
}

TEST_CASE("solve_unbounded_knapsack") {
  auto unit = solve_unbounded_knapsack(make_knapsack(vec({1}), vec({5}), Int(4)));
  REQUIRE(unit.status == Status::Optimal);
  CHECK(unit.solution == vec({4}));
  CHECK(unit.value == 20);

  auto mix =
      solve_unbounded_knapsack(make_knapsack(vec({2, 3}), vec({1, 1}), Int(7)));
  REQUIRE(mix.status == Status::Optimal);
  CHECK(mix.solution == vec({2, 1}));
  CHECK(mix.value == 3);

  auto odd = solve_unbounded_knapsack(make_knapsack(vec({2}), vec({1}), Int(3)));
  CHECK(odd.status == Status::Infeasible);
}

TEST_CASE("solve_bounded_knapsack") {
  auto mix = solve_bounded_knapsack(
      make_knapsack(vec({2, 3}), vec({1, 1}), Int(7), vec({3, 2})));
  REQUIRE(mix.status == Status::Optimal);
  CHECK(mix.solution == vec({2, 1}));
  CHECK(mix.value == 3);

  auto tight = solve_bounded_knapsack(
      make_knapsack(vec({1}), vec({1}), Int(5), vec({4})));
  CHECK(tight.status == Status::Infeasible);

  auto forced = solve_bounded_knapsack(
      make_knapsack(vec({5}), vec({7}), Int(5), vec({1})));
  REQUIRE(forced.status == Status::Optimal);
  CHECK(forced.solution == vec({1}));
  CHECK(forced.value == 7);
}

TEST_CASE("with_slack turns <= capacity into equality") {
  auto k = with_slack(make_knapsack(vec({3}), vec({2}), Int(7), vec({2})));
  auto out = solve_bounded_knapsack(k);
  REQUIRE(out.status == Status::Optimal);
  CHECK(out.value == 4);  // two copies of the item, one unit of slack
  CHECK(out.solution[0] == 2);
  CHECK(out.solution[1] == 1);
}

TEST_CASE("unbounded solver matches the oracle exhaustively") {
  SplitMix64 rng(61);
  for (int t = 0; t < 200; ++t) {
    int n = 1 + static_cast<int>(rng.below(3));
    IntVector weights(n), profits(n);
    std::vector<long> limits(n);
    for (int j = 0; j < n; ++j) {
      weights[j] = rng.range(1, 5);
      profits[j] = rng.range(1, 8);
    }
    long beta = rng.range(1, 30);
    auto k = make_knapsack(weights, profits, Int(beta));
    for (int j = 0; j < n; ++j) limits[j] = beta;  // weights >= 1 cap copies

    SolveStats stats;
    SolveOutcome out = solve_unbounded_knapsack(k, &stats);
    SolveOutcome expect =
        brute_force_solve(to_instance(k), EnumerationBox{limits});
    CHECK(out.status == expect.status);
    if (out.status == Status::Optimal) {
      CHECK(out.value == expect.value);
      CHECK(check_optimal(to_instance(k), out));
      // Residual DP stays within the small-right-hand-side regime.
      Int guard = 4 * (2 * k.delta_a + 1) * k.delta_a;
      CHECK(Int(static_cast<long>(stats.nodes_explored)) <= guard);
      // Eq.-style gap against the fractional relaxation.
      Rat best_ratio(0);
      for (int j = 0; j < n; ++j) {
        Rat r = make_rat(profits[j], weights[j]);
        if (r > best_ratio) best_ratio = r;
      }
      Rat lp_value = best_ratio * Rat(beta);
      CHECK(lp_value - Rat(out.value) <=
            Rat(2 * linf_norm(profits) * k.delta_a));
    }
  }
}

TEST_CASE("bounded solver matches the oracle exhaustively") {
  SplitMix64 rng(62);
  for (int t = 0; t < 200; ++t) {
    int n = 1 + static_cast<int>(rng.below(3));
    IntVector weights(n), profits(n), upper(n);
    std::vector<long> limits(n);
    for (int j = 0; j < n; ++j) {
      weights[j] = rng.range(1, 5);
      profits[j] = rng.range(1, 8);
      long uj = static_cast<long>(rng.below(5));
      upper[j] = uj;
      limits[j] = uj;
    }
    long beta = rng.range(1, 25);
    auto k = make_knapsack(weights, profits, Int(beta), upper);
    SolveOutcome out = solve_bounded_knapsack(k);
    SolveOutcome expect =
        brute_force_solve(to_instance(k), EnumerationBox{limits});
    CHECK(out.status == expect.status);
    if (out.status == Status::Optimal) {
      CHECK(out.value == expect.value);
      CHECK(check_optimal(to_instance(k), out));
    }
  }
}

TEST_CASE("unbounded solver rejects real upper bounds") {
  auto k = make_knapsack(vec({2}), vec({1}), Int(8), vec({2}));
  CHECK_THROWS_AS(solve_unbounded_knapsack(k), PreconditionViolated);
  CHECK_THROWS_AS(
      solve_bounded_knapsack(make_knapsack(vec({2}), vec({1}), Int(8))),
      PreconditionViolated);
}
