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

#ifndef IPSOLVE_JSON_IO_HPP
#define IPSOLVE_JSON_IO_HPP

#include <string>
#include <vector>

#include "ipsolve/core.hpp"
#include "ipsolve/rational.hpp"

namespace ipsolve {

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Instance document: {"m", "n", "A", "b", "c", optional "u"}; entries are
// JSON integers. Throws ParseError on malformed JSON, ValidationError on an
// inconsistent instance.
IPInstance parse_instance(const std::string& text);
std::string instance_to_json(const IPInstance& inst);

// Result document. Integers are serialized as strings so arbitrary-precision
// values survive any JSON reader.
struct Result {
  std::string status;  // "optimal" | "infeasible" | "unbounded"
  IntVector x;
  Int value;
  SolveStats stats;
  long long wall_ms = 0;
  std::string algorithm;
};

Result make_result(const SolveOutcome& out, const SolveStats& stats,
                   long long wall_ms, const std::string& algorithm);
std::string result_to_json(const Result& r);

// Vector-list document for the rearrangement subcommand:
// {"vectors": [[...], ...]} with integer entries.
std::vector<RatVector> parse_vector_list(const std::string& text);

}  // namespace ipsolve

#endif  // IPSOLVE_JSON_IO_HPP
