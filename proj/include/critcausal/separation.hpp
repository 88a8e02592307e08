// Copyright 2026 The critcausal Authors
//
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

#ifndef CRITCAUSAL__SEPARATION_HPP_
#define CRITCAUSAL__SEPARATION_HPP_

#include "critcausal/causal_structure.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace critcausal
{

struct PathQueryResult
{
  bool separated = true;
  /// One unblocked path from a node of x to a node of y; set iff !separated.
  std::optional<std::vector<std::string>> witness_path;
};

/// d-separation of x and y given z. Bidirected arcs behave as a latent fork
/// a <- L -> b. Throws UnknownNode or OverlappingSets.
PathQueryResult d_separated(
  const CausalStructure & s, const NodeSet & x, const NodeSet & y, const NodeSet & z);

/// Index-level test without witness reconstruction.
bool is_d_separated(
  const CausalStructure & s, const NodeMask & x, const NodeMask & y, const NodeMask & z);

/// Back-door criterion for (x, y): no member of `adjustment` descends from x,
/// no member is latent, and the set blocks every path into x.
bool backdoor_admissible(
  const CausalStructure & s, const NodeSet & adjustment, std::string_view x, std::string_view y);

struct AdjustmentOptions
{
  std::size_t max_count = 64;
  /// Emit only inclusion-minimal admissible sets.
  bool minimal_only = false;
};

/**
 * Back-door admissible sets of non-latent nodes for the effect of x on y,
 * ordered by size and then lexicographically by sorted member names.
 *
 * The default mode searches every subset of non-latent non-descendants of x
 * (with a completeness-preserving prune), so the parent set of x is included
 * whenever it is admissible and the search is not cut off by max_count.
 * The minimal mode lists minimal separators of the moralized ancestral
 * back-door graph and scales to graphs with dozens of candidates.
 */
std::vector<NodeSet> enumerate_adjustment_sets(
  const CausalStructure & s, std::string_view x, std::string_view y,
  const AdjustmentOptions & options = {});

}  // namespace critcausal

#endif  // CRITCAUSAL__SEPARATION_HPP_
