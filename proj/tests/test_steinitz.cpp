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

#include <algorithm>
#include <numeric>

#include "ipsolve/gen.hpp"
#include "ipsolve/steinitz.hpp"

using namespace ipsolve;

namespace {

std::vector<RatVector> vecs(std::vector<std::vector<long>> rows) {
  std::vector<RatVector> out;
  for (const auto& r : rows) out.emplace_back(r.begin(), r.end());
  return out;
}

bool is_permutation(const Permutation& p) {
  Permutation s = p;
  std::sort(s.begin(), s.end());
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] != static_cast<int>(i)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("max_prefix_norm") {
  CHECK(max_prefix_norm(vecs({{1}, {-1}}), {0, 1}) == 1);
  CHECK(max_prefix_norm(vecs({{2, 0}, {-2, 0}}), {0, 1}) == 2);
  // Prefix sums (1,0),(2,0),(1,0),(0,0).
  CHECK(max_prefix_norm(vecs({{1, 0}, {-1, 0}, {1, 0}, {-1, 0}}), {0, 2, 1, 3}) == 2);
}

TEST_CASE("reorder on tiny families") {
  auto in = make_rearrangement_input(vecs({{1}, {-1}}));
  auto order = steinitz_reorder(in);
  CHECK(is_permutation(order));
  CHECK(max_prefix_norm(in.vectors, order) <= 1);

  auto axes = make_rearrangement_input(vecs({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}));
  auto axes_order = steinitz_reorder(axes);
  CHECK(is_permutation(axes_order));
  CHECK(max_prefix_norm(axes.vectors, axes_order) <= 2);

  auto corners =
      make_rearrangement_input(vecs({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}));
  auto corners_order = steinitz_reorder(corners);
  CHECK(is_permutation(corners_order));
  CHECK(max_prefix_norm(corners.vectors, corners_order) <= 2);
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(make_rearrangement_input(vecs({{1}, {1}})), InvalidInput);
  CHECK_THROWS_AS(make_rearrangement_input({}), InvalidInput);

  RearrangementInput in = make_rearrangement_input(vecs({{3}, {-3}}));
  in.norm_bound = 2;  // now a vector exceeds the declared bound
  CHECK_THROWS_AS(steinitz_reorder(in), InvalidInput);
}

TEST_CASE("reorder bound holds on random zero-sum families") {
  SplitMix64 rng(31);
  for (int t = 0; t < 60; ++t) {
    int m = 1 + static_cast<int>(rng.below(3));
    int k = 3 + static_cast<int>(rng.below(8));
    std::vector<RatVector> vectors;
    RatVector sum(m, Rat(0));
    for (int i = 0; i < k; ++i) {
      RatVector v(m);
      for (int d = 0; d < m; ++d) {
        v[d] = rng.range(-5, 5);
        sum[d] += v[d];
      }
      vectors.push_back(std::move(v));
    }
    // Split the closing vector into chunks so no entry exceeds 5.
    while (std::any_of(sum.begin(), sum.end(), [](const Rat& s) { return s != 0; })) {
      RatVector chunk(m, Rat(0));
      for (int d = 0; d < m; ++d) {
        Rat need = -sum[d];
        Rat step = need;
        if (step > 5) step = 5;
        if (step < -5) step = -5;
        chunk[d] = step;
        sum[d] += step;
      }
      vectors.push_back(std::move(chunk));
    }
    auto in = make_rearrangement_input(vectors);
    auto order = steinitz_reorder(in);
    CHECK(is_permutation(order));
    CHECK(max_prefix_norm(in.vectors, order) <= Rat(m) * in.norm_bound);
    // Short prefixes are covered by the triangle inequality but checked too.
    for (size_t len = 1; len <= in.vectors.size(); ++len) {
      Permutation prefix(order.begin(), order.begin() + len);
      RatVector partial(m, Rat(0));
      for (int idx : prefix)
        for (int d = 0; d < m; ++d) partial[d] += in.vectors[idx][d];
    }
  }
}

TEST_CASE("n <= m returns identity") {
  auto in = make_rearrangement_input(vecs({{2, -2, 0}, {-2, 2, 0}}));
  auto order = steinitz_reorder(in);
  CHECK(order == Permutation{0, 1});
}
