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

#ifndef CRITCAUSAL__INDICATORS_HPP_
#define CRITCAUSAL__INDICATORS_HPP_

#include "critcausal/causal_engine.hpp"

#include "json.hpp"

#include <Eigen/Core>

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace critcausal
{

enum class LogBase { Nats, Bits };

std::string_view to_string(LogBase b);

/// Result of one causality indicator with every convention it relied on.
struct IndicatorReport
{
  std::string name;
  double value = 0.0;
  NodeSet node_set;
  nlohmann::json metadata = nlohmann::json::object();
  std::vector<std::string> warnings;
};

/// sum p log(p / q), 0 log(0 / q) = 0. Throws InfiniteDivergence, InvalidArgument.
double kl_divergence(const Eigen::VectorXd & p, const Eigen::VectorXd & q, LogBase base = LogBase::Nats);

/// E(phi | do(CP)), E(phi | do(not CP)) and the observational E(phi).
struct CriticalityEffects
{
  double do_cp = 0.0;
  double do_not_cp = 0.0;
  double observed = 0.0;
  std::string route;
};

CriticalityEffects criticality_effects(
  const DiscreteModel & m, const PhenomenonBinding & cp, std::string_view phi,
  Route route = Route::Auto);

/// E(phi | do(CP)) - E(phi | do(not CP)).
IndicatorReport ace(
  const DiscreteModel & m, const PhenomenonBinding & cp, std::string_view phi,
  Route route = Route::Auto);
/// E(phi | do(CP)) / E(phi | do(not CP)). Throws DivisionByZeroEffect.
IndicatorReport rce(
  const DiscreteModel & m, const PhenomenonBinding & cp, std::string_view phi,
  Route route = Route::Auto);
/// 1 - E(phi | do(not CP)) / E(phi). Throws ZeroMeanCriticality; a violated
/// E(do not CP) <= E(do CP) requirement only adds a warning.
IndicatorReport sigma(
  const DiscreteModel & m, const PhenomenonBinding & cp, std::string_view phi,
  Route route = Route::Auto);

/// KL(candidate || reference) of the phenomenon marginal.
IndicatorReport rho1(
  const DiscreteModel & reference, const DiscreteModel & candidate, const PhenomenonBinding & cp,
  LogBase base = LogBase::Nats);

/// KL(candidate || reference) of the joints over N; the reverse order is in
/// the metadata.
IndicatorReport rho2(
  const DiscreteModel & reference, const DiscreteModel & candidate, const NodeSet & N,
  LogBase base = LogBase::Nats);

/// KL(P || P_cut), where P_cut feeds each cut edge an independent draw from
/// the parent's marginal. Throws NotMarkovian, NotFullyInstantiated, InvalidArgument.
double causal_influence(
  const DiscreteModel & m, const std::vector<EdgeDecl> & edges, LogBase base = LogBase::Nats);

enum class Rho3Semantics {
  /// out(n) in each model's own full graph.
  FullGraph,
  /// Both models projected onto N (parents and out(n) restricted to N, CPDs
  /// derived from the full joint) before cutting.
  RestrictToN,
};

std::string_view to_string(Rho3Semantics s);
Rho3Semantics rho3_semantics_from_string(std::string_view s);

/// Model with the graph restricted to N and P(n | pa(n) within N) taken from
/// the full joint.
DiscreteModel project_onto(const DiscreteModel & m, const NodeSet & N);

/// L2 norm over n in N \ {X} of I_reference(out(n)) - I_candidate(out(n)).
IndicatorReport rho3(
  const DiscreteModel & reference, const DiscreteModel & candidate, const NodeSet & N,
  const PhenomenonBinding & cp, Rho3Semantics semantics = Rho3Semantics::FullGraph,
  LogBase base = LogBase::Nats);

/// Threshold check: an indicator is flagged when its value exceeds the
/// threshold given for its name.
struct Judgement
{
  bool plausible = true;
  std::vector<std::string> exceeded;
};

Judgement judge(
  const std::vector<IndicatorReport> & reports, const std::map<std::string, double> & thresholds);

}  // namespace critcausal

#endif  // CRITCAUSAL__INDICATORS_HPP_
