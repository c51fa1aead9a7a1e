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
#include <json.hpp>

#include "ipsolve/gen.hpp"
#include "ipsolve/json_io.hpp"

using namespace ipsolve;

TEST_CASE("parse_instance") {
  IPInstance inst = parse_instance(
      R"({"m":1,"n":2,"A":[[2,3]],"b":[5],"c":[1,1]})");
  CHECK(inst.m() == 1);
  CHECK(inst.n() == 2);
  CHECK(inst.delta == 3);
  CHECK(!inst.upper);

  IPInstance up = parse_instance(
      R"({"m":1,"n":2,"A":[[2,3]],"b":[7],"c":[1,1],"u":[3,2]})");
  REQUIRE(up.upper);
  CHECK((*up.upper)[0] == 3);

  // Large entries survive as strings.
  IPInstance big = parse_instance(
      R"({"m":1,"n":1,"A":[[1]],"b":["123456789012345678901234567890"],"c":[1]})");
  CHECK(big.b[0] == Int("123456789012345678901234567890"));
}

TEST_CASE("parse_instance rejects malformed input") {
  CHECK_THROWS_AS(parse_instance("not json"), ParseError);
  CHECK_THROWS_AS(parse_instance(R"({"m":1,"n":2,"A":[[2,3]],"b":[5]})"),
                  ParseError);
  CHECK_THROWS_AS(
      parse_instance(R"({"m":2,"n":2,"A":[[2,3]],"b":[5,1],"c":[1,1]})"),
      ParseError);
  CHECK_THROWS_AS(
      parse_instance(R"({"m":1,"n":2,"A":[[2,"x"]],"b":[5],"c":[1,1]})"),
      ParseError);
  CHECK_THROWS_AS(
      parse_instance(R"({"m":1,"n":2,"A":[[2,3]],"b":[5],"c":[1,1],"u":[1,-1]})"),
      NegativeUpperBound);
}

TEST_CASE("instance round trip") {
  const std::string text =
      R"({"m":2,"n":2,"A":[[1,-4],[0,2]],"b":[0,2],"c":[3,-1],"u":[2,5]})";
  IPInstance inst = parse_instance(text);
  IPInstance again = parse_instance(instance_to_json(inst));
  CHECK(inst.a.data == again.a.data);
  CHECK(inst.b == again.b);
  CHECK(inst.c == again.c);
  CHECK(inst.upper == again.upper);
}

TEST_CASE("result serialization") {
  SolveStats stats;
  stats.nodes_explored = 12;
  stats.arcs_relaxed = 34;
  IntVector x{Int(2), Int("99999999999999999999")};
  Result r = make_result(SolveOutcome::optimal(std::move(x), Int(7)), stats, 5,
                         "dp");
  auto doc = nlohmann::json::parse(result_to_json(r));
  CHECK(doc["status"] == "optimal");
  CHECK(doc["value"] == "7");
  CHECK(doc["x"][0] == "2");
  CHECK(doc["x"][1] == "99999999999999999999");
  CHECK(doc["stats"]["nodes_explored"] == 12);
  CHECK(doc["stats"]["arcs_relaxed"] == 34);
  CHECK(doc["stats"]["wall_ms"] == 5);
  CHECK(doc["algorithm"] == "dp");

  Result inf = make_result(SolveOutcome::infeasible(), SolveStats{}, 0, "dp");
  auto infdoc = nlohmann::json::parse(result_to_json(inf));
  CHECK(infdoc["status"] == "infeasible");
  CHECK(!infdoc.contains("x"));
  CHECK(!infdoc.contains("value"));

  Result unb = make_result(SolveOutcome::unbounded(), SolveStats{}, 0, "dp");
  CHECK(nlohmann::json::parse(result_to_json(unb))["status"] == "unbounded");
}

TEST_CASE("parse_vector_list") {
  auto vecs = parse_vector_list(R"({"vectors":[[1,0],[-1,0]]})");
  REQUIRE(vecs.size() == 2);
  CHECK(vecs[0][0] == 1);
  CHECK(vecs[1][0] == -1);

  CHECK_THROWS_AS(parse_vector_list(R"({"rows":[[1]]})"), ParseError);
  CHECK_THROWS_AS(parse_vector_list(R"({"vectors":[1]})"), ParseError);
}

TEST_CASE("random instances survive the JSON round trip") {
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    IPInstance inst = gen_instance(2, 3, 3, seed, seed % 2 == 0);
    IPInstance again = parse_instance(instance_to_json(inst));
    CHECK(inst.a.data == again.a.data);
    CHECK(inst.b == again.b);
    CHECK(inst.c == again.c);
    CHECK(inst.upper == again.upper);
    CHECK(inst.delta == again.delta);
  }
}
