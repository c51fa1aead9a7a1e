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

// Python bindings. Instances and results cross the boundary as JSON strings
// (the same documents the CLI reads and writes) so arbitrary-precision
// integers never pass through a lossy native type.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <chrono>

#include "ipsolve/dp.hpp"
#include "ipsolve/gen.hpp"
#include "ipsolve/json_io.hpp"
#include "ipsolve/knapsack.hpp"
#include "ipsolve/oracle.hpp"
#include "ipsolve/proximity.hpp"
#include "ipsolve/steinitz.hpp"

namespace py = pybind11;
using namespace ipsolve;

namespace {

std::string pick_algorithm(const IPInstance& inst, const std::string& requested) {
  if (requested != "auto") return requested;
  bool positive_weights = inst.m() == 1 && inst.b[0] >= 1;
  for (int j = 0; positive_weights && j < inst.n(); ++j) {
    if (inst.a.at(0, j) < 1) positive_weights = false;
  }
  if (positive_weights) return "knapsack";
  if (inst.upper) return "proximity";
  for (const Int& e : inst.a.data) {
    if (e < 0) return "dp";
  }
  return "acyclic";
}

std::string solve_json(const std::string& text, const std::string& algorithm) {
  IPInstance inst = parse_instance(text);
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
  return result_to_json(make_result(out, stats, ms, algo));
}

std::string feasible_json(const std::string& text) {
  IPInstance inst = parse_instance(text);
  SolveStats stats;
  std::optional<IntVector> z = feasible(inst, &stats);
  SolveOutcome out = z ? SolveOutcome::optimal(*z, dot(inst.c, *z))
                       : SolveOutcome::infeasible();
  return result_to_json(make_result(out, stats, 0, "feasibility-bfs"));
}

py::dict bounds_json(const std::string& text) {
  IPInstance inst = parse_instance(text);
  py::dict d;
  d["l1_bound"] = l1_bound(inst.m(), inst.delta).get_str();
  d["cook_l1_bound"] = cook_l1_bound(inst.n(), inst.m(), inst.delta).get_str();
  d["gap_bound"] = gap_bound(linf_norm(inst.c), inst.m(), inst.delta).get_str();
  d["node_count_bound"] =
      node_count_bound(inst.m(), inst.delta, inst.b).get_str();
  return d;
}

std::vector<int> reorder_py(const std::vector<std::vector<long>>& vectors) {
  std::vector<RatVector> vs;
  for (const auto& row : vectors) vs.emplace_back(row.begin(), row.end());
  RearrangementInput in = make_rearrangement_input(std::move(vs));
  return steinitz_reorder(in);
}

py::tuple binary_expand_py(long l, long u) {
  BinaryExpansionEntry e = binary_expand(Int(l), Int(u));
  std::vector<long> coeffs;
  for (const Int& d : e.coefficients) coeffs.push_back(d.get_si());
  return py::make_tuple(e.shift.get_si(), coeffs);
}

std::string brute_force_json(const std::string& text,
                             const std::vector<long>& limits) {
  IPInstance inst = parse_instance(text);
  SolveOutcome out = brute_force_solve(inst, EnumerationBox{limits});
  return result_to_json(make_result(out, SolveStats{}, 0, "oracle"));
}

std::string gen_json(int m, int n, long delta, uint64_t seed, bool bounded) {
  return instance_to_json(gen_instance(m, n, delta, seed, bounded));
}

}  // namespace

PYBIND11_MODULE(_ipsolve, mod) {
  mod.doc() = "Exact solvers for integer programs in standard form";
  mod.def("solve", &solve_json, py::arg("instance_json"),
          py::arg("algorithm") = "auto",
          "Solve an instance document; returns the result document.");
  mod.def("feasible", &feasible_json, py::arg("instance_json"),
          "Feasibility check; the result carries a witness when one exists.");
  mod.def("bounds", &bounds_json, py::arg("instance_json"),
          "Proximity, gap, and node-count bounds as decimal strings.");
  mod.def("steinitz_reorder", &reorder_py, py::arg("vectors"),
          "Permutation keeping all prefix sums of a zero-sum family small.");
  mod.def("binary_expand", &binary_expand_py, py::arg("l"), py::arg("u"),
          "(shift, coefficients) whose subset sums cover [-l, u] exactly.");
  mod.def("brute_force", &brute_force_json, py::arg("instance_json"),
          py::arg("box"), "Exhaustive reference solver over a finite box.");
  mod.def("gen_instance", &gen_json, py::arg("m"), py::arg("n"),
          py::arg("delta"), py::arg("seed"), py::arg("bounded") = false,
          "Deterministic random instance document.");

  py::register_exception<ParseError>(mod, "ParseError");
  py::register_exception<ValidationError>(mod, "ValidationError");
  py::register_exception<PreconditionViolated>(mod, "PreconditionViolated");
}
