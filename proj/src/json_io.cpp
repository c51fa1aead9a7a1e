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

#include "ipsolve/json_io.hpp"

#include <json.hpp>

namespace ipsolve {

using nlohmann::json;

namespace {

Int to_int(const json& v, const char* field) {
  if (v.is_number_integer()) return Int(static_cast<long>(v.get<int64_t>()));
  if (v.is_string()) {
    try {
      return Int(v.get<std::string>());  // large values
    } catch (const std::invalid_argument&) {
      throw ParseError(std::string(field) + ": not a decimal integer");
    }
  }
  throw ParseError(std::string(field) + ": expected an integer");
}

IntVector to_vector(const json& v, const char* field) {
  if (!v.is_array()) throw ParseError(std::string(field) + ": expected an array");
  IntVector out;
  out.reserve(v.size());
  for (const json& e : v) out.push_back(to_int(e, field));
  return out;
}

json parse(const std::string& text) {
  json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) throw ParseError("malformed JSON");
  return doc;
}

}  // namespace

IPInstance parse_instance(const std::string& text) {
  json doc = parse(text);
  for (const char* key : {"m", "n", "A", "b", "c"}) {
    if (!doc.contains(key)) throw ParseError(std::string("missing key: ") + key);
  }
  Int m = to_int(doc["m"], "m");
  Int n = to_int(doc["n"], "n");
  if (!m.fits_sint_p() || !n.fits_sint_p() || m < 1 || n < 1) {
    throw ParseError("m and n must be small positive integers");
  }
  if (!doc["A"].is_array() || doc["A"].size() != m.get_ui()) {
    throw ParseError("A must be an array of m rows");
  }
  IntMatrix a(static_cast<int>(m.get_si()), static_cast<int>(n.get_si()));
  for (int i = 0; i < a.rows; ++i) {
    IntVector row = to_vector(doc["A"][i], "A");
    if (row.size() != static_cast<size_t>(a.cols)) {
      throw ParseError("A rows must have n entries");
    }
    for (int j = 0; j < a.cols; ++j) a.at(i, j) = row[j];
  }
  IntVector b = to_vector(doc["b"], "b");
  IntVector c = to_vector(doc["c"], "c");
  std::optional<IntVector> upper;
  if (doc.contains("u") && !doc["u"].is_null()) upper = to_vector(doc["u"], "u");
  return validate(std::move(a), std::move(b), std::move(c), std::move(upper));
}

std::string instance_to_json(const IPInstance& inst) {
  json doc;
  doc["m"] = inst.m();
  doc["n"] = inst.n();
  json rows = json::array();
  for (int i = 0; i < inst.m(); ++i) {
    json row = json::array();
    for (int j = 0; j < inst.n(); ++j) row.push_back(inst.a.at(i, j).get_si());
    rows.push_back(std::move(row));
  }
  doc["A"] = std::move(rows);
  json b = json::array();
  for (const Int& e : inst.b) b.push_back(e.get_si());
  doc["b"] = std::move(b);
  json c = json::array();
  for (const Int& e : inst.c) c.push_back(e.get_si());
  doc["c"] = std::move(c);
  if (inst.upper) {
    json u = json::array();
    for (const Int& e : *inst.upper) u.push_back(e.get_si());
    doc["u"] = std::move(u);
  }
  return doc.dump();
}

Result make_result(const SolveOutcome& out, const SolveStats& stats,
                   long long wall_ms, const std::string& algorithm) {
  Result r;
  switch (out.status) {
    case Status::Optimal:
      r.status = "optimal";
      r.x = out.solution;
      r.value = out.value;
      break;
    case Status::Infeasible:
      r.status = "infeasible";
      break;
    case Status::Unbounded:
      r.status = "unbounded";
      break;
  }
  r.stats = stats;
  r.wall_ms = wall_ms;
  r.algorithm = algorithm;
  return r;
}

std::string result_to_json(const Result& r) {
  json doc;
  doc["status"] = r.status;
  if (r.status == "optimal") {
    json x = json::array();
    for (const Int& e : r.x) x.push_back(e.get_str());
    doc["x"] = std::move(x);
    doc["value"] = r.value.get_str();
  }
  doc["stats"] = {{"nodes_explored", r.stats.nodes_explored},
                  {"arcs_relaxed", r.stats.arcs_relaxed},
                  {"wall_ms", r.wall_ms}};
  doc["algorithm"] = r.algorithm;
  return doc.dump();
}

std::vector<RatVector> parse_vector_list(const std::string& text) {
  json doc = parse(text);
  if (!doc.contains("vectors") || !doc["vectors"].is_array()) {
    throw ParseError("expected {\"vectors\": [[...], ...]}");
  }
  std::vector<RatVector> vectors;
  for (const json& row : doc["vectors"]) {
    if (!row.is_array()) throw ParseError("vector entries must be arrays");
    RatVector v;
    for (const json& e : row) v.emplace_back(to_int(e, "vectors"));
    vectors.push_back(std::move(v));
  }
  return vectors;
}

}  // namespace ipsolve
