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

#include "critcausal/causal_engine.hpp"

#include "critcausal/error.hpp"
#include "critcausal/separation.hpp"

#include <algorithm>

namespace critcausal
{

std::pair<std::size_t, std::size_t> phenomenon_categories(
  const DiscreteModel & m, const PhenomenonBinding & cp)
{
  const VariableSpec & spec = m.spec(cp.variable);
  if (spec.cardinality() != 2) {
    throw Error(
      ErrorCode::NotBinaryPhenomenon, "phenomenon variable '" + cp.variable + "' has " +
                                        std::to_string(spec.cardinality()) + " categories");
  }
  const std::size_t c = spec.category(cp.cp_label);
  return {c, 1 - c};
}

std::string_view to_string(Route r)
{
  switch (r) {
    case Route::Auto:
      return "auto";
    case Route::Truncated:
      return "truncated";
    case Route::ParentAdjust:
      return "parent";
    case Route::Backdoor:
      return "backdoor";
  }
  return "auto";
}

Route route_from_string(std::string_view s)
{
  for (Route r : {Route::Auto, Route::Truncated, Route::ParentAdjust, Route::Backdoor}) {
    if (to_string(r) == s) {
      return r;
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown route '" + std::string(s) + "'");
}

namespace
{

Distribution observational_joint(const DiscreteModel & m, const std::vector<NodeIndex> & vars)
{
  try {
    return enumerate(m, vars, {});
  } catch (const Error & e) {
    if (e.code() != ErrorCode::InsufficientInstantiation || !m.evidence()) {
      throw;
    }
  }
  std::vector<std::string> names;
  for (NodeIndex v : vars) {
    names.push_back(m.structure().name(v));
  }
  return empirical(*m.evidence(), names, {});
}

Distribution point_mass(const DiscreteModel & m, NodeIndex node, std::size_t category)
{
  Distribution d;
  d.variables = {m.structure().name(node)};
  d.cardinalities = {m.spec(node).cardinality()};
  d.p = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(d.cardinalities[0]));
  d.p[static_cast<Eigen::Index>(category)] = 1.0;
  return d;
}

std::pair<NodeIndex, std::size_t> single_target(const DiscreteModel & m, const Intervention & i)
{
  if (i.size() != 1) {
    throw Error(
      ErrorCode::InvalidArgument,
      "adjustment routes take exactly one intervened node; use the truncated route");
  }
  const auto idx = to_indices(m, i);
  return *idx.begin();
}

// sum_z P(t | x, z) P(z) from one observational joint over (t, x, z...).
Distribution adjust(
  const DiscreteModel & m, NodeIndex target, NodeIndex x, std::size_t x_cat,
  const std::vector<NodeIndex> & z)
{
  std::vector<NodeIndex> vars{target, x};
  vars.insert(vars.end(), z.begin(), z.end());
  const Distribution joint = observational_joint(m, vars);
  const std::size_t ct = m.spec(target).cardinality();
  const std::size_t cx = m.spec(x).cardinality();
  std::size_t nz = 1;
  for (NodeIndex v : z) {
    nz *= m.spec(v).cardinality();
  }
  auto at = [&](std::size_t t, std::size_t xv, std::size_t zf) {
    return joint.p[static_cast<Eigen::Index>((t * cx + xv) * nz + zf)];
  };
  Distribution out;
  out.variables = {m.structure().name(target)};
  out.cardinalities = {ct};
  out.p = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(ct));
  for (std::size_t zf = 0; zf < nz; ++zf) {
    double pz = 0.0;
    double pxz = 0.0;
    for (std::size_t t = 0; t < ct; ++t) {
      for (std::size_t xv = 0; xv < cx; ++xv) {
        pz += at(t, xv, zf);
      }
      pxz += at(t, x_cat, zf);
    }
    if (pz <= 0.0) {
      continue;
    }
    if (pxz <= 0.0) {
      throw Error(
        ErrorCode::ZeroProbabilityCondition,
        "P(" + m.structure().name(x) + " = " + m.spec(x).domain[x_cat] +
          ", adjustment stratum) is 0 while the stratum has positive probability");
    }
    for (std::size_t t = 0; t < ct; ++t) {
      out.p[static_cast<Eigen::Index>(t)] += at(t, x_cat, zf) / pxz * pz;
    }
  }
  return out;
}

// Shortcuts valid for every route: do(x) leaves non-descendants untouched.
std::optional<Distribution> trivial_effect(
  const DiscreteModel & m, NodeIndex x, std::size_t x_cat, NodeIndex target)
{
  if (target == x) {
    return point_mass(m, x, x_cat);
  }
  if (!descendant_mask(m.structure(), x)[target]) {
    return observational_joint(m, {target});
  }
  return std::nullopt;
}

}  // namespace

Distribution interventional_truncated(
  const DiscreteModel & m, const Intervention & i, std::string_view target)
{
  const NodeIndex t = m.structure().index(target);
  try {
    return enumerate(m, {t}, {}, to_indices(m, i));
  } catch (const Error & e) {
    if (e.code() == ErrorCode::InsufficientInstantiation) {
      throw Error(ErrorCode::NotFullyInstantiated, e.what());
    }
    throw;
  }
}

Distribution interventional_parent_adjust(
  const DiscreteModel & m, const Intervention & i, std::string_view target)
{
  const auto [x, x_cat] = single_target(m, i);
  const NodeIndex t = m.structure().index(target);
  const NodeSet measurable = measurable_nodes(m);
  std::vector<NodeIndex> needed = m.structure().parents(x);
  needed.push_back(x);
  needed.push_back(t);
  for (NodeIndex v : needed) {
    if (m.structure().is_latent(v) || !measurable.count(m.structure().name(v))) {
      throw Error(
        ErrorCode::ParentsNotInstantiated,
        "'" + m.structure().name(v) + "' is needed for parent adjustment but is not instantiated");
    }
  }
  if (auto d = trivial_effect(m, x, x_cat, t)) {
    return *d;
  }
  return adjust(m, t, x, x_cat, m.structure().parents(x));
}

Distribution interventional_backdoor(
  const DiscreteModel & m, const Intervention & i, std::string_view target, const NodeSet & S)
{
  const auto [x, x_cat] = single_target(m, i);
  const NodeIndex t = m.structure().index(target);
  if (!backdoor_admissible(m.structure(), S, m.structure().name(x), target)) {
    std::string members;
    for (const auto & s : S) {
      members += (members.empty() ? "" : ", ") + s;
    }
    throw Error(
      ErrorCode::NotAdmissible, "{" + members + "} is not back-door admissible for (" +
                                  m.structure().name(x) + ", " + std::string(target) + ")");
  }
  if (auto d = trivial_effect(m, x, x_cat, t)) {
    return *d;
  }
  return adjust(m, t, x, x_cat, m.structure().indices(S));
}

NodeSet measurable_nodes(const DiscreteModel & m)
{
  NodeSet out = m.instantiated();
  if (m.evidence()) {
    for (const auto & c : m.evidence()->columns) {
      out.insert(c.name);
    }
  }
  return out;
}

std::optional<NodeSet> find_adjustment_set(
  const DiscreteModel & m, std::string_view x, std::string_view y)
{
  const CausalStructure & s = m.structure();
  const NodeSet measurable = measurable_nodes(m);
  NodeSet hidden;
  for (NodeIndex i = 0; i < s.size(); ++i) {
    if (!measurable.count(s.name(i))) {
      hidden.insert(s.name(i));
    }
  }
  const CausalStructure view = s.with_latent(hidden, true);
  if (view.is_latent(view.index(x)) || view.is_latent(view.index(y))) {
    return std::nullopt;
  }
  AdjustmentOptions options;
  options.minimal_only = true;
  options.max_count = 1;
  auto sets = enumerate_adjustment_sets(view, x, y, options);
  if (sets.empty()) {
    return std::nullopt;
  }
  return sets.front();
}

Distribution interventional(
  const DiscreteModel & m, const Intervention & i, std::string_view target, Route route,
  const std::optional<NodeSet> & adjustment)
{
  auto backdoor = [&] {
    if (adjustment) {
      return interventional_backdoor(m, i, target, *adjustment);
    }
    const auto [x, x_cat] = single_target(m, i);
    const auto S = find_adjustment_set(m, m.structure().name(x), target);
    if (!S) {
      throw Error(
        ErrorCode::NotIdentifiable, "no back-door admissible set of measurable nodes for (" +
                                      m.structure().name(x) + ", " + std::string(target) + ")");
    }
    return interventional_backdoor(m, i, target, *S);
  };
  switch (route) {
    case Route::Truncated:
      return interventional_truncated(m, i, target);
    case Route::ParentAdjust:
      return interventional_parent_adjust(m, i, target);
    case Route::Backdoor:
      return backdoor();
    case Route::Auto:
      break;
  }
  if (i.empty()) {
    return marginal(m, {std::string(target)});
  }
  try {
    return interventional_truncated(m, i, target);
  } catch (const Error & e) {
    if (e.code() != ErrorCode::NotFullyInstantiated && e.code() != ErrorCode::NotMarkovian) {
      throw;
    }
    if (i.size() != 1) {
      throw Error(ErrorCode::NotIdentifiable, e.what());
    }
  }
  return backdoor();
}

double expectation(const DiscreteModel & m, const Distribution & d)
{
  if (d.variables.size() != 1) {
    throw Error(ErrorCode::InvalidArgument, "expectation needs a single-variable distribution");
  }
  const VariableSpec & spec = m.spec(d.variables.front());
  double e = 0.0;
  for (std::size_t c = 0; c < spec.cardinality(); ++c) {
    e += spec.codes[c] * d.p[static_cast<Eigen::Index>(c)];
  }
  return e;
}

double interventional_expectation(
  const DiscreteModel & m, const Intervention & i, std::string_view target, Route route,
  const std::optional<NodeSet> & adjustment)
{
  return expectation(m, interventional(m, i, target, route, adjustment));
}

SafetyPrincipleReport evaluate_safety_principle(
  const DiscreteModel & m, const SafetyPrinciple & sp, const PhenomenonBinding & cp,
  std::string_view phi)
{
  if (sp.intervention.empty()) {
    throw Error(ErrorCode::InvalidArgument, "safety principle '" + sp.name + "' intervenes on nothing");
  }
  const auto [cp_cat, not_cp_cat] = phenomenon_categories(m, cp);
  (void)not_cp_cat;
  const CausalStructure & s = m.structure();
  NodeMask reach(s.size(), false);
  reach[s.index(cp.variable)] = true;
  reach[s.index(phi)] = true;
  reach = ancestral_closure(s, reach);

  SafetyPrincipleReport r;
  for (const auto & [node, label] : sp.intervention) {
    if (!reach[s.index(node)]) {
      r.warnings.push_back(
        "TargetNotAncestor: '" + node + "' is not an ancestor of '" + cp.variable + "' or '" +
        std::string(phi) + "'");
    }
  }
  const auto cp_idx = static_cast<Eigen::Index>(cp_cat);
  r.p_cp = marginal(m, {cp.variable}).p[cp_idx];
  r.p_cp_do = interventional(m, sp.intervention, cp.variable).p[cp_idx];
  r.e_phi = expectation(m, marginal(m, {std::string(phi)}));
  r.e_phi_do = interventional_expectation(m, sp.intervention, phi);
  r.delta_p_cp = r.p_cp_do - r.p_cp;
  r.delta_e_phi = r.e_phi_do - r.e_phi;
  return r;
}

}  // namespace critcausal
