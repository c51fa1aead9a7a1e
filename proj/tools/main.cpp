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

// Command line front end. Exit codes: 0 optimal, 1 infeasible, 2 unbounded,
// 3 parse error, 4 precondition violation, 5 internal error.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ipsolve/dp.hpp"
#include "ipsolve/gen.hpp"
#include "ipsolve/json_io.hpp"
#include "ipsolve/knapsack.hpp"
#include "ipsolve/oracle.hpp"
#include "ipsolve/proximity.hpp"
#include "ipsolve/steinitz.hpp"

namespace {

using namespace ipsolve;

constexpr int kExitOptimal = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitUnbounded = 2;
constexpr int kExitParse = 3;
constexpr int kExitPrecondition = 4;
constexpr int kExitInternal = 5;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int status_exit_code(Status s) {
  switch (s) {
    case Status::Optimal:
      return kExitOptimal;
    case Status::Infeasible:
      return kExitInfeasible;
    case Status::Unbounded:
      return kExitUnbounded;
  }
  return kExitInternal;
}

std::string pick_algorithm(const IPInstance& inst, const std::string& requested) {
  if (requested != "auto") return requested;
  bool positive_weights = inst.m() == 1 && inst.b[0] >= 1;
  for (int j = 0; positive_weights && j < inst.n(); ++j) {
    if (inst.a.at(0, j) < 1) positive_weights = false;
  }
  if (positive_weights) return "knapsack";
  if (inst.upper) return "proximity";
  bool nonneg = true;
  for (const Int& e : inst.a.data) {
    if (e < 0) nonneg = false;
  }
  return nonneg ? "acyclic" : "dp";
}

int cmd_solve(const std::string& path, const std::string& algorithm) {
  IPInstance inst = parse_instance(read_file(path));
  std::string algo = pick_algorithm(inst, algorithm);
  SolveStats stats;
  auto start = std::chrono::steady_clock::now();
  SolveOutcome out;
  if (algo == "knapsack") {
    KnapsackInstance k = from_instance(inst);
    out = k.upper ? solve_bounded_knapsack(k, &stats)
                  : solve_unbounded_knapsack(k, &stats);
  } else if (algo == "proximity") {
    out = solve_bounded(inst, &stats);
  } else if (algo == "acyclic") {
    out = solve_acyclic(inst, &stats);
  } else {
    out = solve_standard_form(inst, &stats);
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  std::cout << result_to_json(make_result(out, stats, ms, algo)) << "\n";
  return status_exit_code(out.status);
}

int cmd_feasible(const std::string& path) {
  IPInstance inst = parse_instance(read_file(path));
  SolveStats stats;
  auto start = std::chrono::steady_clock::now();
  std::optional<IntVector> z = feasible(inst, &stats);
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  SolveOutcome out = z ? SolveOutcome::optimal(*z, dot(inst.c, *z))
                       : SolveOutcome::infeasible();
  std::cout << result_to_json(make_result(out, stats, ms, "feasibility-bfs"))
            << "\n";
  return status_exit_code(out.status);
}

int cmd_bounds(const std::string& path) {
  IPInstance inst = parse_instance(read_file(path));
  nlohmann::json doc;
  doc["l1_bound"] = l1_bound(inst.m(), inst.delta).get_str();
  doc["cook_l1_bound"] = cook_l1_bound(inst.n(), inst.m(), inst.delta).get_str();
  doc["gap_bound"] = gap_bound(linf_norm(inst.c), inst.m(), inst.delta).get_str();
  doc["node_count_bound"] =
      node_count_bound(inst.m(), inst.delta, inst.b).get_str();
  std::cout << doc.dump() << "\n";
  return kExitOptimal;
}

int cmd_steinitz(const std::string& path) {
  std::vector<RatVector> vectors = parse_vector_list(read_file(path));
  RearrangementInput input = make_rearrangement_input(std::move(vectors));
  Permutation order = steinitz_reorder(input);
  nlohmann::json doc;
  doc["permutation"] = order;
  doc["max_prefix_norm"] = rat_str(max_prefix_norm(input.vectors, order));
  doc["bound"] = rat_str(Rat(input.dim) * input.norm_bound);
  std::cout << doc.dump() << "\n";
  return kExitOptimal;
}

int cmd_gen(int m, int n, long delta, uint64_t seed, bool bounded) {
  std::cout << instance_to_json(gen_instance(m, n, delta, seed, bounded)) << "\n";
  return kExitOptimal;
}

int cmd_oracle(const std::string& path, long box_limit) {
  IPInstance inst = parse_instance(read_file(path));
  EnumerationBox box = default_box(inst, box_limit);
  SolveStats stats;
  auto start = std::chrono::steady_clock::now();
  SolveOutcome out = brute_force_solve(inst, box);
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  std::cout << result_to_json(make_result(out, stats, ms, "oracle")) << "\n";
  return status_exit_code(out.status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integer programming in standard form: tube dynamic programs, "
               "proximity-driven reductions, knapsack specializations"};
  app.require_subcommand(1);

  std::string path, algorithm = "auto";
  auto* solve = app.add_subcommand("solve", "Solve an instance file");
  solve->add_option("path", path)->required();
  solve->add_option("--algorithm", algorithm)
      ->check(CLI::IsMember({"auto", "dp", "proximity", "knapsack", "acyclic"}));

  auto* feas = app.add_subcommand("feasible", "Feasibility only (BFS)");
  feas->add_option("path", path)->required();

  auto* bounds = app.add_subcommand("bounds", "Report proximity/gap/node bounds");
  bounds->add_option("path", path)->required();

  auto* steinitz = app.add_subcommand("steinitz", "Reorder a zero-sum vector list");
  steinitz->add_option("path", path)->required();

  int m = 1, n = 2;
  long delta = 1;
  uint64_t seed = 0;
  bool bounded = false;
  auto* gen = app.add_subcommand("gen", "Generate a deterministic instance");
  gen->add_option("--m", m);
  gen->add_option("--n", n);
  gen->add_option("--delta", delta);
  gen->add_option("--seed", seed);
  gen->add_flag("--bounded", bounded);

  long box_limit = 10;
  auto* oracle = app.add_subcommand("oracle", "Brute-force solve (debugging)");
  oracle->add_option("path", path)->required();
  oracle->add_option("--box", box_limit);

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return cmd_solve(path, algorithm);
    if (feas->parsed()) return cmd_feasible(path);
    if (bounds->parsed()) return cmd_bounds(path);
    if (steinitz->parsed()) return cmd_steinitz(path);
    if (gen->parsed()) return cmd_gen(m, n, delta, seed, bounded);
    if (oracle->parsed()) return cmd_oracle(path, box_limit);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ValidationError& e) {
    std::cerr << "invalid instance: " << e.what() << "\n";
    return kExitParse;
  } catch (const PreconditionViolated& e) {
    std::cerr << "precondition violation: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const BoxTooLarge& e) {
    std::cerr << "oracle box too large: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}
