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

#ifndef IPSOLVE_STEINITZ_HPP
#define IPSOLVE_STEINITZ_HPP

#include <stdexcept>
#include <vector>

#include "ipsolve/rational.hpp"

namespace ipsolve {

class InvalidInput : public std::runtime_error {
 public:
  explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};

// n vectors in dimension m that sum to zero exactly; norm_bound is the
// largest l-infinity norm among them.
struct RearrangementInput {
  std::vector<RatVector> vectors;
  int dim = 0;
  Rat norm_bound;
};

// Derives dim and norm_bound; throws InvalidInput if the vectors do not sum
// to zero or dimensions disagree.
RearrangementInput make_rearrangement_input(std::vector<RatVector> vectors);

// order[k] = index of the vector placed at position k (0-based).
using Permutation = std::vector<int>;

// Reorders the vectors so that every prefix sum has l-infinity norm at most
// dim * norm_bound. Set-shrinking construction: repeatedly solve the carrier
// LP over the active set with right-hand side k-1-m and drop an index whose
// vertex coordinate is exactly zero.
Permutation steinitz_reorder(const RearrangementInput& input);

enum class Norm { LInf, L1 };

// Exact maximum over k of the norm of the k-th prefix sum under `order`.
Rat max_prefix_norm(const std::vector<RatVector>& vectors,
                    const Permutation& order, Norm norm = Norm::LInf);

}  // namespace ipsolve

#endif  // IPSOLVE_STEINITZ_HPP
