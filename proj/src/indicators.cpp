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

#include "critcausal/indicators.hpp"

#include "critcausal/error.hpp"

#include <cmath>
#include <limits>
#include <set>

namespace critcausal
{

std::string_view to_string(LogBase b)
{
  return b == LogBase::Bits ? "bits" : "nats";
}

double kl_divergence(const Eigen::VectorXd & p, const Eigen::VectorXd & q, LogBase base)
{
  if (p.size() != q.size()) {
    throw Error(ErrorCode::InvalidArgument, "KL divergence needs distributions of equal size");
  }
  double sum = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (p[i] < 0.0 || q[i] < 0.0) {
      throw Error(ErrorCode::InvalidArgument, "KL divergence of negative masses");
    }
    if (p[i] == 0.0) {
      continue;
    }
    if (q[i] == 0.0) {
      throw Error(
        ErrorCode::InfiniteDivergence,
        "support mismatch at position " + std::to_string(i) + ": p > 0 where q = 0");
    }
    sum += p[i] * std::log(p[i] / q[i]);
  }
  if (sum < 0.0) {
    sum = 0.0;
  }
  return base == LogBase::Bits ? sum / std::log(2.0) : sum;
}

CriticalityEffects criticality_effects(
  const DiscreteModel & m, const PhenomenonBinding & cp, std::string_view phi, Route route)
{
  const auto [cp_cat, not_cp_cat] = phenomenon_categories(m, cp);
  const VariableSpec & x = m.spec(cp.variable);
  CriticalityEffects e;
  e.do_cp = interventional_expectation(m, {{cp.variable, x.domain[cp_cat]}}, phi, route);
  e.do_not_cp = interventional_expectation(m, {{cp.variable, x.domain[not_cp_cat]}}, phi, route);
  e.observed = expectation(m, marginal(m, {std::string(phi)}));
  e.route = std::string(to_string(route));
  return e;
}

namespace
{

IndicatorReport effect_report(
  std::string name, const DiscreteModel & m, const PhenomenonBinding & cp, std::string_view phi,
  const CriticalityEffects & e)
{
  IndicatorReport r;
  r.name = std::move(name);
  r.node_set = {cp.variable, std::string(phi)};
  const VariableSpec & spec = m.spec(phi);
  nlohmann::json codes = nlohmann::json::object();
  for (std::size_t c = 0; c < spec.cardinality(); ++c) {
    codes[spec.domain[c]] = spec.codes[c];
  }
  r.metadata["phi"] = std::string(phi);
  r.metadata["phi_codes"] = codes;
  r.metadata["phenomenon"] = cp.variable;
  r.metadata["cp_label"] = cp.cp_label;
  r.metadata["e_do_cp"] = e.do_cp;
  r.metadata["e_do_not_cp"] = e.do_not_cp;
  r.metadata["route"] = e.route;
  return r;
}

void require_same_domains(
  const DiscreteModel & reference, const DiscreteModel & candidate, const NodeSet & nodes)
{
  for (const auto & n : nodes) {
    if (reference.spec(n).domain != candidate.spec(n).domain) {
      throw Error(
        ErrorCode::ValidationError, "'" + n + "' has different domains in the two models");
    }
  }
}

nlohmann::json to_json(const Eigen::VectorXd & v)
{
  nlohmann::json out = nlohmann::json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    out.push_back(v[i]);
  }
  return out;
}

nlohmann::json kl_or_inf(const Eigen::VectorXd & p, const Eigen::VectorXd & q, LogBase base)
{
  try {
    return kl_divergence(p, q, base);
  } catch (const Error & e) {
    if (e.code() != ErrorCode::InfiniteDivergence) {
      throw;
    }
    return "inf";
  }
}

}  // namespace

IndicatorReport ace(
  const DiscreteModel & m, const PhenomenonBinding & cp, std::string_view phi, Route route)
{
  const CriticalityEffects e = criticality_effects(m, cp, phi, route);
  IndicatorReport r = effect_report("ACE", m, cp, phi, e);
  r.value = e.do_cp - e.do_not_cp;
  return r;
}

IndicatorReport rce(
  const DiscreteModel & m, const PhenomenonBinding & cp, std::string_view phi, Route route)
{
  const CriticalityEffects e = criticality_effects(m, cp, phi, route);
  if (e.do_not_cp == 0.0) {
    throw Error(ErrorCode::DivisionByZeroEffect, "E(phi | do(not CP)) is 0");
  }
  IndicatorReport r = effect_report("RCE", m, cp, phi, e);
  r.value = e.do_cp / e.do_not_cp;
  return r;
}

IndicatorReport sigma(
  const DiscreteModel & m, const PhenomenonBinding & cp, std::string_view phi, Route route)
{
  const CriticalityEffects e = criticality_effects(m, cp, phi, route);
  if (e.observed == 0.0) {
    throw Error(ErrorCode::ZeroMeanCriticality, "E(phi) is 0");
  }
  IndicatorReport r = effect_report("sigma", m, cp, phi, e);
  r.value = 1.0 - e.do_not_cp / e.observed;
  r.metadata["e_phi"] = e.observed;
  if (e.do_not_cp > e.do_cp) {
    r.warnings.push_back(
      "precondition E(phi | do(not CP)) <= E(phi | do(CP)) does not hold; value reported anyway");
  }
  return r;
}

IndicatorReport rho1(
  const DiscreteModel & reference, const DiscreteModel & candidate, const PhenomenonBinding & cp,
  LogBase base)
{
  require_same_domains(reference, candidate, {cp.variable});
  const Eigen::VectorXd p_ref = marginal(reference, {cp.variable}).p;
  const Eigen::VectorXd p_cand = marginal(candidate, {cp.variable}).p;
  IndicatorReport r;
  r.name = "rho1";
  r.node_set = {cp.variable};
  r.value = kl_divergence(p_cand, p_ref, base);
  r.metadata["kl_order"] = "candidate||reference";
  r.metadata["log_base"] = std::string(to_string(base));
  r.metadata["reverse"] = kl_or_inf(p_ref, p_cand, base);
  r.metadata["reference_marginal"] = to_json(p_ref);
  r.metadata["candidate_marginal"] = to_json(p_cand);
  r.metadata["phenomenon"] = cp.variable;
  return r;
}

IndicatorReport rho2(
  const DiscreteModel & reference, const DiscreteModel & candidate, const NodeSet & N,
  LogBase base)
{
  if (N.empty()) {
    throw Error(ErrorCode::InvalidArgument, "rho2 needs a non-empty node set");
  }
  require_same_domains(reference, candidate, N);
  const Eigen::VectorXd p_ref = marginal(reference, N).p;
  const Eigen::VectorXd p_cand = marginal(candidate, N).p;
  IndicatorReport r;
  r.name = "rho2";
  r.node_set = N;
  r.value = kl_divergence(p_cand, p_ref, base);
  r.metadata["kl_order"] = "candidate||reference";
  r.metadata["log_base"] = std::string(to_string(base));
  r.metadata["candidate||reference"] = r.value;
  r.metadata["reference||candidate"] = kl_or_inf(p_ref, p_cand, base);
  return r;
}

double causal_influence(const DiscreteModel & m, const std::vector<EdgeDecl> & edges, LogBase base)
{
  const CausalStructure & s = m.structure();
  if (!s.is_markovian()) {
    throw Error(ErrorCode::NotMarkovian, "causal influence needs a structure without confounding arcs");
  }
  for (NodeIndex i = 0; i < s.size(); ++i) {
    if (!m.has_cpd(i)) {
      throw Error(ErrorCode::NotFullyInstantiated, "node '" + s.name(i) + "' has no CPD");
    }
  }
  std::map<NodeIndex, std::set<NodeIndex>> cut;
  for (const auto & [from, to] : edges) {
    const NodeIndex a = s.index(from);
    const NodeIndex b = s.index(to);
    const auto & pa = s.parents(b);
    if (std::find(pa.begin(), pa.end(), a) == pa.end()) {
      throw Error(ErrorCode::InvalidArgument, "no edge " + from + " -> " + to + " to cut");
    }
    cut[b].insert(a);
  }
  if (cut.empty()) {
    return 0.0;
  }

  DiscreteModel cut_model = m;
  for (const auto & [child, cut_parents] : cut) {
    const auto & pa = s.parents(child);
    std::vector<std::size_t> card;
    std::vector<Eigen::VectorXd> parent_marginal;
    for (NodeIndex p : pa) {
      card.push_back(m.spec(p).cardinality());
      parent_marginal.push_back(
        cut_parents.count(p) ? marginal(m, {s.name(p)}).p : Eigen::VectorXd());
    }
    const Eigen::MatrixXd & table = m.cpd(child).table();
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(table.rows(), table.cols());
    std::vector<std::size_t> cfg(pa.size(), 0);
    std::vector<std::size_t> swapped(pa.size(), 0);
    for (Eigen::Index r = 0; r < table.rows(); ++r) {
      // Decode row r into parent categories, last parent fastest.
      Eigen::Index rest = r;
      for (std::size_t k = pa.size(); k-- > 0;) {
        cfg[k] = static_cast<std::size_t>(rest % static_cast<Eigen::Index>(card[k]));
        rest /= static_cast<Eigen::Index>(card[k]);
      }
      // Walk all categories of the cut parents, the others stay at cfg.
      swapped = cfg;
      for (std::size_t k = 0; k < pa.size(); ++k) {
        if (cut_parents.count(pa[k])) {
          swapped[k] = 0;
        }
      }
      while (true) {
        double w = 1.0;
        Eigen::Index row = 0;
        for (std::size_t k = 0; k < pa.size(); ++k) {
          row = row * static_cast<Eigen::Index>(card[k]) + static_cast<Eigen::Index>(swapped[k]);
          if (cut_parents.count(pa[k])) {
            w *= parent_marginal[k][static_cast<Eigen::Index>(swapped[k])];
          }
        }
        out.row(r) += w * table.row(row);
        std::size_t k = pa.size();
        while (k-- > 0) {
          if (!cut_parents.count(pa[k])) {
            continue;
          }
          if (++swapped[k] < card[k]) {
            break;
          }
          swapped[k] = 0;
        }
        if (k == static_cast<std::size_t>(-1)) {
          break;
        }
      }
    }
    std::vector<std::string> names;
    for (NodeIndex p : pa) {
      names.push_back(s.name(p));
    }
    // Rows are convex mixtures of valid rows; renormalize away rounding.
    for (Eigen::Index r = 0; r < out.rows(); ++r) {
      out.row(r) /= out.row(r).sum();
    }
    cut_model = cut_model.with_cpd(Cpd(s.name(child), names, out));
  }
  std::vector<NodeIndex> all(s.size());
  for (NodeIndex i = 0; i < s.size(); ++i) {
    all[i] = i;
  }
  return kl_divergence(enumerate(m, all, {}).p, enumerate(cut_model, all, {}).p, base);
}

std::string_view to_string(Rho3Semantics s)
{
  return s == Rho3Semantics::RestrictToN ? "restrict-to-N" : "full-graph";
}

Rho3Semantics rho3_semantics_from_string(std::string_view s)
{
  if (s == "full-graph") {
    return Rho3Semantics::FullGraph;
  }
  if (s == "restrict-to-N") {
    return Rho3Semantics::RestrictToN;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown rho3 semantics '" + std::string(s) + "'");
}

DiscreteModel project_onto(const DiscreteModel & m, const NodeSet & N)
{
  const CausalStructure & s = m.structure();
  std::vector<NodeDecl> nodes;
  std::vector<VariableSpec> specs;
  for (const auto & n : N) {
    const NodeIndex i = s.index(n);
    nodes.push_back({n, s.is_latent(i)});
    specs.push_back(m.spec(i));
  }
  std::vector<EdgeDecl> edges;
  for (const auto & [a, b] : s.directed_edges()) {
    if (N.count(s.name(a)) && N.count(s.name(b))) {
      edges.emplace_back(s.name(a), s.name(b));
    }
  }
  CausalStructure projected = CausalStructure::build(nodes, edges);
  std::vector<Cpd> cpds;
  for (NodeIndex j = 0; j < projected.size(); ++j) {
    std::vector<NodeIndex> vars;
    std::vector<std::string> parent_names;
    Eigen::Index rows = 1;
    for (NodeIndex p : projected.parents(j)) {
      vars.push_back(s.index(projected.name(p)));
      parent_names.push_back(projected.name(p));
      rows *= static_cast<Eigen::Index>(m.spec(vars.back()).cardinality());
    }
    const NodeIndex self = s.index(projected.name(j));
    vars.push_back(self);
    const auto cols = static_cast<Eigen::Index>(m.spec(self).cardinality());
    const Distribution joint = enumerate(m, vars, {});
    Eigen::MatrixXd table(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
      const Eigen::VectorXd seg = joint.p.segment(r * cols, cols);
      const double total = seg.sum();
      if (total > 0.0) {
        table.row(r) = seg.transpose() / total;
      } else {
        table.row(r).setConstant(1.0 / static_cast<double>(cols));
      }
    }
    cpds.emplace_back(projected.name(j), parent_names, table);
  }
  return DiscreteModel::build(std::move(projected), std::move(specs), std::move(cpds));
}

namespace
{

std::vector<EdgeDecl> out_edges(const CausalStructure & s, const std::string & n)
{
  std::vector<EdgeDecl> out;
  for (NodeIndex c : s.children(s.index(n))) {
    out.emplace_back(n, s.name(c));
  }
  return out;
}

}  // namespace

IndicatorReport rho3(
  const DiscreteModel & reference, const DiscreteModel & candidate, const NodeSet & N,
  const PhenomenonBinding & cp, Rho3Semantics semantics, LogBase base)
{
  const bool restrict = semantics == Rho3Semantics::RestrictToN;
  const DiscreteModel ref = restrict ? project_onto(reference, N) : reference;
  const DiscreteModel cand = restrict ? project_onto(candidate, N) : candidate;
  IndicatorReport r;
  r.name = "rho3";
  r.node_set = N;
  nlohmann::json components = nlohmann::json::object();
  nlohmann::json i_ref = nlohmann::json::object();
  nlohmann::json i_cand = nlohmann::json::object();
  double sq = 0.0;
  for (const auto & n : N) {
    if (n == cp.variable) {
      continue;
    }
    const double a = causal_influence(ref, out_edges(ref.structure(), n), base);
    const double b = causal_influence(cand, out_edges(cand.structure(), n), base);
    components[n] = a - b;
    i_ref[n] = a;
    i_cand[n] = b;
    sq += (a - b) * (a - b);
  }
  r.value = std::sqrt(sq);
  r.metadata["semantics"] = std::string(to_string(semantics));
  r.metadata["log_base"] = std::string(to_string(base));
  r.metadata["components"] = components;
  r.metadata["influence_reference"] = i_ref;
  r.metadata["influence_candidate"] = i_cand;
  r.metadata["kl_order"] = "joint||cut";
  return r;
}

Judgement judge(
  const std::vector<IndicatorReport> & reports, const std::map<std::string, double> & thresholds)
{
  Judgement j;
  for (const auto & r : reports) {
    auto it = thresholds.find(r.name);
    if (it != thresholds.end() && !(r.value <= it->second)) {
      j.exceeded.push_back(r.name);
    }
  }
  j.plausible = j.exceeded.empty();
  return j;
}

}  // namespace critcausal
