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

#ifndef CRITCAUSAL__CAUSAL_ENGINE_HPP_
#define CRITCAUSAL__CAUSAL_ENGINE_HPP_

#include "critcausal/discrete_model.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace critcausal
{

/// Binary variable X whose category `cp_label` marks the phenomenon.
struct PhenomenonBinding
{
  std::string variable;
  std::string cp_label;
};

/// Index of the CP category and of its complement. Throws NotBinaryPhenomenon,
/// UnknownCategory.
std::pair<std::size_t, std::size_t> phenomenon_categories(
  const DiscreteModel & m, const PhenomenonBinding & cp);

/// Atomic do(node = label, ...).
using Intervention = Assignment;

struct SafetyPrinciple
{
  std::string name;
  Intervention intervention;
  std::string rationale;
};

enum class Route {
  /// Truncated factorization where possible, else back-door over the first
  /// admissible set of measurable nodes.
  Auto,
  Truncated,
  ParentAdjust,
  Backdoor,
};

std::string_view to_string(Route r);
/// Accepts auto, truncated, parent and backdoor. Throws InvalidArgument.
Route route_from_string(std::string_view s);

/// P(target | do(i)) by surgery and exact enumeration. An empty intervention
/// gives the observational marginal. Throws NotMarkovian, NotFullyInstantiated.
Distribution interventional_truncated(
  const DiscreteModel & m, const Intervention & i, std::string_view target);

/// Sum over pa(x) of P(target | x, pa) P(pa). Needs only the parents of x to be
/// measurable. Throws ParentsNotInstantiated, ZeroProbabilityCondition.
Distribution interventional_parent_adjust(
  const DiscreteModel & m, const Intervention & i, std::string_view target);

/// Sum over s of P(target | x, s) P(s) after checking admissibility of S.
/// Throws NotAdmissible, InsufficientInstantiation, ZeroProbabilityCondition.
Distribution interventional_backdoor(
  const DiscreteModel & m, const Intervention & i, std::string_view target, const NodeSet & S);

/// Nodes carrying a CPD or a column of the evidence dataset.
NodeSet measurable_nodes(const DiscreteModel & m);

/// First admissible set (by size, then name order) of measurable nodes, if any.
std::optional<NodeSet> find_adjustment_set(
  const DiscreteModel & m, std::string_view x, std::string_view y);

/// Dispatch on `route`. `adjustment` is used by Backdoor and chosen by
/// find_adjustment_set() when absent. Throws NotIdentifiable when Auto finds
/// no route.
Distribution interventional(
  const DiscreteModel & m, const Intervention & i, std::string_view target,
  Route route = Route::Auto, const std::optional<NodeSet> & adjustment = std::nullopt);

/// Sum of codes weighted by a single-variable distribution.
double expectation(const DiscreteModel & m, const Distribution & d);

double interventional_expectation(
  const DiscreteModel & m, const Intervention & i, std::string_view target,
  Route route = Route::Auto, const std::optional<NodeSet> & adjustment = std::nullopt);

struct SafetyPrincipleReport
{
  double p_cp = 0.0;
  double p_cp_do = 0.0;
  double e_phi = 0.0;
  double e_phi_do = 0.0;
  double delta_p_cp = 0.0;
  double delta_e_phi = 0.0;
  std::vector<std::string> warnings;
};

/// Change of P(X = CP) and E(phi) under the principle's intervention. A target
/// that is not an ancestor of X or phi only raises a warning.
SafetyPrincipleReport evaluate_safety_principle(
  const DiscreteModel & m, const SafetyPrinciple & sp, const PhenomenonBinding & cp,
  std::string_view phi);

}  // namespace critcausal

#endif  // CRITCAUSAL__CAUSAL_ENGINE_HPP_
