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

#include "critcausal/discrete_model.hpp"

#include "critcausal/error.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <random>
#include <set>
#include <sstream>

namespace critcausal
{

std::optional<std::size_t> VariableSpec::find(std::string_view label) const
{
  const auto it = std::find(domain.begin(), domain.end(), label);
  if (it == domain.end()) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - domain.begin());
}

std::size_t VariableSpec::category(std::string_view label) const
{
  if (auto c = find(label)) {
    return *c;
  }
  throw Error(
    ErrorCode::UnknownCategory,
    "'" + std::string(label) + "' is not in the domain of '" + name + "'");
}

VariableSpec binary_spec(std::string name, std::string label0, std::string label1)
{
  VariableSpec spec;
  spec.name = std::move(name);
  spec.domain = {std::move(label0), std::move(label1)};
  spec.codes = {0.0, 1.0};
  return spec;
}

Cpd::Cpd(std::string child, std::vector<std::string> parents, Eigen::MatrixXd table)
: child_(std::move(child)), parents_(std::move(parents)), table_(std::move(table))
{
}

bool Cpd::operator==(const Cpd & other) const
{
  return child_ == other.child_ && parents_ == other.parents_ &&
         table_.rows() == other.table_.rows() && table_.cols() == other.table_.cols() &&
         table_ == other.table_;
}

std::size_t Distribution::offset(const std::vector<std::size_t> & categories) const
{
  std::size_t flat = 0;
  for (std::size_t k = 0; k < cardinalities.size(); ++k) {
    flat = flat * cardinalities[k] + categories.at(k);
  }
  return flat;
}

std::string_view to_string(Provenance p)
{
  switch (p) {
    case Provenance::RealWorld:
      return "real-world";
    case Provenance::Synthetic:
      return "synthetic";
    case Provenance::Fixture:
      return "fixture";
  }
  return "synthetic";
}

Provenance provenance_from_string(std::string_view s)
{
  for (Provenance p : {Provenance::RealWorld, Provenance::Synthetic, Provenance::Fixture}) {
    if (to_string(p) == s) {
      return p;
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown provenance '" + std::string(s) + "'");
}

std::optional<std::size_t> Dataset::column(std::string_view name) const
{
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i].name == name) {
      return i;
    }
  }
  return std::nullopt;
}

namespace
{

void validate_spec(const VariableSpec & spec)
{
  if (spec.domain.empty()) {
    throw Error(ErrorCode::ValidationError, "variable '" + spec.name + "' has an empty domain");
  }
  if (spec.codes.size() != spec.domain.size()) {
    throw Error(
      ErrorCode::ValidationError, "variable '" + spec.name + "' needs one code per category");
  }
  std::set<std::string> seen;
  for (const auto & label : spec.domain) {
    if (label.empty() || !seen.insert(label).second) {
      throw Error(
        ErrorCode::ValidationError,
        "variable '" + spec.name + "' has an empty or repeated label '" + label + "'");
    }
  }
  for (double c : spec.codes) {
    if (!std::isfinite(c)) {
      throw Error(ErrorCode::ValidationError, "variable '" + spec.name + "' has a non-finite code");
    }
  }
}

std::string join_names(const std::vector<std::string> & names)
{
  std::string out = "[";
  for (std::size_t i = 0; i < names.size(); ++i) {
    out += (i ? ", " : "") + names[i];
  }
  return out + "]";
}

}  // namespace

DiscreteModel DiscreteModel::build(
  CausalStructure structure, std::vector<VariableSpec> specs, std::vector<Cpd> cpds)
{
  DiscreteModel m;
  m.specs_.resize(structure.size());
  std::vector<bool> has_spec(structure.size(), false);
  for (auto & spec : specs) {
    const NodeIndex i = structure.index(spec.name);
    if (has_spec[i]) {
      throw Error(ErrorCode::ValidationError, "variable '" + spec.name + "' is declared twice");
    }
    validate_spec(spec);
    has_spec[i] = true;
    m.specs_[i] = std::move(spec);
  }
  for (NodeIndex i = 0; i < structure.size(); ++i) {
    if (!has_spec[i]) {
      throw Error(ErrorCode::ValidationError, "node '" + structure.name(i) + "' has no variable spec");
    }
  }

  m.cpds_.resize(structure.size());
  for (auto & cpd : cpds) {
    const NodeIndex i = structure.index(cpd.child());
    if (m.cpds_[i]) {
      throw Error(ErrorCode::InvalidCpd, "node '" + cpd.child() + "' has two CPDs");
    }
    std::vector<std::string> expected;
    Eigen::Index rows = 1;
    for (NodeIndex p : structure.parents(i)) {
      expected.push_back(structure.name(p));
      rows *= static_cast<Eigen::Index>(m.specs_[p].cardinality());
    }
    if (cpd.parents() != expected) {
      throw Error(
        ErrorCode::InvalidCpd, "CPD of '" + cpd.child() + "' lists parents " +
                                 join_names(cpd.parents()) + " but the graph has " +
                                 join_names(expected));
    }
    const auto cols = static_cast<Eigen::Index>(m.specs_[i].cardinality());
    const Eigen::MatrixXd & t = cpd.table();
    if (t.rows() != rows || t.cols() != cols) {
      std::ostringstream msg;
      msg << "CPD of '" << cpd.child() << "' is " << t.rows() << "x" << t.cols() << ", expected "
          << rows << "x" << cols;
      throw Error(ErrorCode::InvalidCpd, msg.str());
    }
    for (Eigen::Index r = 0; r < t.rows(); ++r) {
      const auto row = t.row(r);
      if (!row.allFinite() || row.minCoeff() < 0.0 || row.maxCoeff() > 1.0) {
        throw Error(
          ErrorCode::InvalidCpd,
          "CPD of '" + cpd.child() + "' row " + std::to_string(r) + " has entries outside [0, 1]");
      }
      if (std::abs(row.sum() - 1.0) > 1e-9) {
        std::ostringstream msg;
        msg.precision(12);
        msg << "CPD of '" << cpd.child() << "' row " << r << " sums to " << row.sum();
        throw Error(ErrorCode::InvalidCpd, msg.str());
      }
    }
    m.cpds_[i] = std::move(cpd);
  }
  m.structure_ = std::move(structure);
  return m;
}

const VariableSpec & DiscreteModel::spec(std::string_view name) const
{
  return specs_.at(structure_.index(name));
}

const Cpd & DiscreteModel::cpd(NodeIndex i) const
{
  if (!cpds_.at(i)) {
    throw Error(
      ErrorCode::InsufficientInstantiation, "node '" + structure_.name(i) + "' has no CPD");
  }
  return *cpds_[i];
}

std::vector<Cpd> DiscreteModel::cpds() const
{
  std::vector<Cpd> out;
  for (const auto & c : cpds_) {
    if (c) {
      out.push_back(*c);
    }
  }
  return out;
}

NodeSet DiscreteModel::instantiated() const
{
  NodeSet out;
  for (NodeIndex i = 0; i < structure_.size(); ++i) {
    if (cpds_[i]) {
      out.insert(structure_.name(i));
    }
  }
  return out;
}

bool DiscreteModel::fully_instantiated() const
{
  for (NodeIndex i = 0; i < structure_.size(); ++i) {
    if (!structure_.is_latent(i) && !cpds_[i]) {
      return false;
    }
  }
  return true;
}

DiscreteModel DiscreteModel::with_evidence(Dataset d) const
{
  DiscreteModel copy = *this;
  copy.evidence_ = std::move(d);
  return copy;
}

DiscreteModel DiscreteModel::with_state_space_limit(std::uint64_t limit) const
{
  DiscreteModel copy = *this;
  copy.state_space_limit_ = limit;
  return copy;
}

DiscreteModel DiscreteModel::with_cpd(Cpd cpd) const
{
  std::vector<Cpd> all;
  for (NodeIndex i = 0; i < structure_.size(); ++i) {
    if (cpds_[i] && structure_.name(i) != cpd.child()) {
      all.push_back(*cpds_[i]);
    }
  }
  all.push_back(std::move(cpd));
  DiscreteModel out = build(structure_, specs_, std::move(all));
  out.evidence_ = evidence_;
  out.state_space_limit_ = state_space_limit_;
  return out;
}

IndexAssignment to_indices(const DiscreteModel & m, const Assignment & a)
{
  IndexAssignment out;
  for (const auto & [node, label] : a) {
    const NodeIndex i = m.structure().index(node);
    out[i] = m.spec(i).category(label);
  }
  return out;
}

namespace
{

// Row of a node's CPD selected by the current categories of its parents.
struct Factor
{
  NodeIndex node;
  std::vector<NodeIndex> parents;
  const Eigen::MatrixXd * table;

  double value(const std::vector<std::size_t> & state, const std::vector<VariableSpec> & specs) const
  {
    Eigen::Index row = 0;
    for (NodeIndex p : parents) {
      row = row * static_cast<Eigen::Index>(specs[p].cardinality()) +
            static_cast<Eigen::Index>(state[p]);
    }
    return (*table)(row, static_cast<Eigen::Index>(state[node]));
  }
};

}  // namespace

Distribution enumerate(
  const DiscreteModel & m, const std::vector<NodeIndex> & targets, const IndexAssignment & given,
  const IndexAssignment & clamped)
{
  const CausalStructure & s = m.structure();
  for (const auto & [node, cat] : given) {
    auto it = clamped.find(node);
    if (it != clamped.end() && it->second != cat) {
      throw Error(
        ErrorCode::ZeroProbabilityCondition,
        "conditioning on '" + s.name(node) + "' contradicts its intervention value");
    }
  }

  NodeMask relevant(s.size(), false);
  std::deque<NodeIndex> queue;
  auto visit = [&](NodeIndex i) {
    if (!relevant[i]) {
      relevant[i] = true;
      queue.push_back(i);
    }
  };
  for (NodeIndex t : targets) {
    visit(t);
  }
  for (const auto & [node, cat] : given) {
    visit(node);
  }
  while (!queue.empty()) {
    const NodeIndex i = queue.front();
    queue.pop_front();
    if (clamped.count(i)) {
      continue;
    }
    for (NodeIndex p : s.parents(i)) {
      visit(p);
    }
  }

  std::vector<std::size_t> state(s.size(), 0);
  std::vector<NodeIndex> free_nodes;
  std::vector<Factor> factors;
  std::uint64_t states = 1;
  for (NodeIndex i : s.topological_order()) {
    if (!relevant[i]) {
      continue;
    }
    if (auto c = clamped.find(i); c != clamped.end()) {
      state[i] = c->second;
      continue;
    }
    for (NodeIndex w : s.confounded_with(i)) {
      if (relevant[w] && !clamped.count(w)) {
        throw Error(
          ErrorCode::NotMarkovian,
          "'" + s.name(i) + "' and '" + s.name(w) + "' share a confounding arc");
      }
    }
    factors.push_back({i, s.parents(i), &m.cpd(i).table()});
    if (auto g = given.find(i); g != given.end()) {
      state[i] = g->second;
      continue;
    }
    free_nodes.push_back(i);
    states *= m.spec(i).cardinality();
    if (states > m.state_space_limit()) {
      throw Error(
        ErrorCode::StateSpaceTooLarge,
        "enumeration needs more than " + std::to_string(m.state_space_limit()) + " states");
    }
  }

  Distribution out;
  for (NodeIndex t : targets) {
    out.variables.push_back(s.name(t));
    out.cardinalities.push_back(m.spec(t).cardinality());
  }
  std::size_t total = 1;
  for (std::size_t c : out.cardinalities) {
    total *= c;
  }
  out.p = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(total));

  std::vector<std::size_t> target_state(targets.size());
  double mass = 0.0;
  for (std::uint64_t k = 0; k < states; ++k) {
    double w = 1.0;
    for (const Factor & f : factors) {
      w *= f.value(state, m.specs());
      if (w == 0.0) {
        break;
      }
    }
    if (w != 0.0) {
      for (std::size_t j = 0; j < targets.size(); ++j) {
        target_state[j] = state[targets[j]];
      }
      out.p[static_cast<Eigen::Index>(out.offset(target_state))] += w;
      mass += w;
    }
    // Odometer step, last free node fastest.
    for (std::size_t j = free_nodes.size(); j-- > 0;) {
      const NodeIndex v = free_nodes[j];
      if (++state[v] < m.spec(v).cardinality()) {
        break;
      }
      state[v] = 0;
    }
  }
  if (mass <= 0.0) {
    throw Error(ErrorCode::ZeroProbabilityCondition, "conditioning event has probability 0");
  }
  out.p /= mass;
  return out;
}

Distribution empirical(
  const Dataset & d, const std::vector<std::string> & targets, const Assignment & given)
{
  if (d.records.empty()) {
    throw Error(ErrorCode::EmptyDataset, "evidence dataset has no records");
  }
  auto column_of = [&](const std::string & name) {
    auto c = d.column(name);
    if (!c) {
      throw Error(
        ErrorCode::InsufficientInstantiation,
        "'" + name + "' is neither instantiated nor observed in the evidence dataset");
    }
    return *c;
  };
  std::vector<std::size_t> target_cols;
  Distribution out;
  for (const auto & t : targets) {
    target_cols.push_back(column_of(t));
    out.variables.push_back(t);
    out.cardinalities.push_back(d.columns[target_cols.back()].cardinality());
  }
  std::vector<std::pair<std::size_t, std::uint32_t>> conditions;
  for (const auto & [node, label] : given) {
    const std::size_t c = column_of(node);
    conditions.emplace_back(c, static_cast<std::uint32_t>(d.columns[c].category(label)));
  }
  std::size_t total = 1;
  for (std::size_t c : out.cardinalities) {
    total *= c;
  }
  out.p = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(total));
  std::vector<std::size_t> cats(targets.size());
  double matched = 0.0;
  for (const auto & row : d.records) {
    const bool ok = std::all_of(conditions.begin(), conditions.end(), [&](const auto & c) {
      return row[c.first] == c.second;
    });
    if (!ok) {
      continue;
    }
    for (std::size_t j = 0; j < target_cols.size(); ++j) {
      cats[j] = row[target_cols[j]];
    }
    out.p[static_cast<Eigen::Index>(out.offset(cats))] += 1.0;
    matched += 1.0;
  }
  if (matched == 0.0) {
    throw Error(
      ErrorCode::ZeroProbabilityCondition, "no evidence record matches the conditioning event");
  }
  out.p /= matched;
  return out;
}

double joint_probability(const DiscreteModel & m, const Assignment & assignment)
{
  const CausalStructure & s = m.structure();
  for (NodeIndex i = 0; i < s.size(); ++i) {
    if (!m.has_cpd(i)) {
      throw Error(ErrorCode::NotFullyInstantiated, "node '" + s.name(i) + "' has no CPD");
    }
  }
  const IndexAssignment idx = to_indices(m, assignment);
  std::vector<std::size_t> state(s.size(), 0);
  for (NodeIndex i = 0; i < s.size(); ++i) {
    auto it = idx.find(i);
    if (it == idx.end()) {
      throw Error(ErrorCode::InvalidArgument, "assignment does not cover '" + s.name(i) + "'");
    }
    state[i] = it->second;
  }
  double p = 1.0;
  for (NodeIndex i = 0; i < s.size(); ++i) {
    p *= Factor{i, s.parents(i), &m.cpd(i).table()}.value(state, m.specs());
  }
  return p;
}

Distribution marginal(const DiscreteModel & m, const NodeSet & targets, const Assignment & given)
{
  const std::vector<NodeIndex> idx = m.structure().indices(targets);
  try {
    return enumerate(m, idx, to_indices(m, given));
  } catch (const Error & e) {
    if (e.code() != ErrorCode::InsufficientInstantiation || !m.evidence()) {
      throw;
    }
  }
  return empirical(*m.evidence(), {targets.begin(), targets.end()}, given);
}

Dataset sample(const DiscreteModel & m, std::size_t n, std::uint64_t seed, const Assignment & clamped)
{
  const CausalStructure & s = m.structure();
  const IndexAssignment fixed = to_indices(m, clamped);
  std::vector<Factor> factors(s.size());
  for (NodeIndex i = 0; i < s.size(); ++i) {
    if (fixed.count(i)) {
      continue;
    }
    if (!m.has_cpd(i)) {
      throw Error(ErrorCode::NotFullyInstantiated, "cannot sample '" + s.name(i) + "' without a CPD");
    }
    factors[i] = {i, s.parents(i), &m.cpd(i).table()};
  }
  Dataset d;
  d.columns = m.specs();
  d.provenance = Provenance::Synthetic;
  d.records.reserve(n);
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> state(s.size(), 0);
  for (std::size_t r = 0; r < n; ++r) {
    for (NodeIndex i : s.topological_order()) {
      if (auto it = fixed.find(i); it != fixed.end()) {
        state[i] = it->second;
        continue;
      }
      // Explicit 53-bit mantissa draw; std::uniform_real_distribution is not
      // specified bit-exactly across standard libraries.
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      const Factor & f = factors[i];
      Eigen::Index row = 0;
      for (NodeIndex p : f.parents) {
        row = row * static_cast<Eigen::Index>(m.spec(p).cardinality()) +
              static_cast<Eigen::Index>(state[p]);
      }
      const auto probs = f.table->row(row);
      std::size_t c = 0;
      double cum = probs(0);
      while (u >= cum && c + 1 < static_cast<std::size_t>(probs.size())) {
        ++c;
        cum += probs(static_cast<Eigen::Index>(c));
      }
      state[i] = c;
    }
    d.records.emplace_back(state.begin(), state.end());
  }
  return d;
}

EstimationResult estimate_cpds(
  const CausalStructure & s, const std::vector<VariableSpec> & specs, const Dataset & d,
  double alpha)
{
  if (d.records.empty()) {
    throw Error(ErrorCode::EmptyDataset, "cannot estimate CPDs from an empty dataset");
  }
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw Error(ErrorCode::InvalidArgument, "smoothing must be a finite value >= 0");
  }
  std::vector<const VariableSpec *> by_node(s.size(), nullptr);
  for (const auto & spec : specs) {
    by_node[s.index(spec.name)] = &spec;
  }
  std::vector<std::optional<std::size_t>> col(s.size());
  for (std::size_t c = 0; c < d.columns.size(); ++c) {
    const NodeIndex i = s.index(d.columns[c].name);
    if (by_node[i] && by_node[i]->domain != d.columns[c].domain) {
      throw Error(
        ErrorCode::ValidationError,
        "dataset column '" + d.columns[c].name + "' disagrees with the variable domain");
    }
    col[i] = c;
  }

  EstimationResult result;
  std::vector<Cpd> cpds;
  for (NodeIndex i = 0; i < s.size(); ++i) {
    const auto & parents = s.parents(i);
    if (!col[i] || !by_node[i] ||
        std::any_of(parents.begin(), parents.end(), [&](NodeIndex p) { return !col[p]; })) {
      continue;
    }
    Eigen::Index rows = 1;
    for (NodeIndex p : parents) {
      rows *= static_cast<Eigen::Index>(d.columns[*col[p]].cardinality());
    }
    const auto cols = static_cast<Eigen::Index>(by_node[i]->cardinality());
    Eigen::MatrixXd counts = Eigen::MatrixXd::Zero(rows, cols);
    for (const auto & rec : d.records) {
      Eigen::Index row = 0;
      for (NodeIndex p : parents) {
        row = row * static_cast<Eigen::Index>(d.columns[*col[p]].cardinality()) + rec[*col[p]];
      }
      counts(row, rec[*col[i]]) += 1.0;
    }
    std::vector<Eigen::Index> unseen;
    for (Eigen::Index r = 0; r < rows; ++r) {
      const double total = counts.row(r).sum();
      if (total + alpha * static_cast<double>(cols) <= 0.0) {
        unseen.push_back(r);
        continue;
      }
      counts.row(r) = (counts.row(r).array() + alpha) / (total + alpha * static_cast<double>(cols));
    }
    if (!unseen.empty()) {
      result.warnings.push_back(
        "UnseenParentConfiguration: '" + s.name(i) + "' has " + std::to_string(unseen.size()) +
        " parent configuration(s) without records; left uninstantiated");
      continue;
    }
    std::vector<std::string> parent_names;
    for (NodeIndex p : parents) {
      parent_names.push_back(s.name(p));
    }
    cpds.emplace_back(s.name(i), std::move(parent_names), std::move(counts));
  }
  result.model = DiscreteModel::build(s, specs, std::move(cpds)).with_evidence(d);
  return result;
}

}  // namespace critcausal
