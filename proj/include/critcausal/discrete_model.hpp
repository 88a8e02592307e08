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

#ifndef CRITCAUSAL__DISCRETE_MODEL_HPP_
#define CRITCAUSAL__DISCRETE_MODEL_HPP_

#include "critcausal/causal_structure.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace critcausal
{

struct VariableSpec
{
  std::string name;
  std::vector<std::string> domain;
  /// Numeric value of each category when the variable enters an expectation.
  std::vector<double> codes;
  std::string unit;
  /// Value range of the underlying quantity, e.g. "[0, inf)".
  std::string range;

  std::size_t cardinality() const { return domain.size(); }
  std::optional<std::size_t> find(std::string_view label) const;
  /// Throws UnknownCategory.
  std::size_t category(std::string_view label) const;
};

/// Binary spec with labels {label0, label1} and codes {0, 1}.
VariableSpec binary_spec(std::string name, std::string label0 = "0", std::string label1 = "1");

/**
 * Conditional probability table P(child | parents).
 *
 * One row per parent configuration (row-major over the parents in the given
 * order, rightmost parent varying fastest), one column per child category.
 */
class Cpd
{
public:
  Cpd() = default;
  Cpd(std::string child, std::vector<std::string> parents, Eigen::MatrixXd table);

  const std::string & child() const { return child_; }
  const std::vector<std::string> & parents() const { return parents_; }
  const Eigen::MatrixXd & table() const { return table_; }

  bool operator==(const Cpd & other) const;

private:
  std::string child_;
  std::vector<std::string> parents_;
  Eigen::MatrixXd table_;
};

/// Names a category of each listed variable.
using Assignment = std::map<std::string, std::string>;

/// Probability vector over the product of some variables' domains, laid out
/// row-major with the last variable varying fastest.
struct Distribution
{
  std::vector<std::string> variables;
  std::vector<std::size_t> cardinalities;
  Eigen::VectorXd p;

  /// Flat position of one category per variable.
  std::size_t offset(const std::vector<std::size_t> & categories) const;
};

enum class Provenance { RealWorld, Synthetic, Fixture };

std::string_view to_string(Provenance p);
/// Throws InvalidArgument.
Provenance provenance_from_string(std::string_view s);

/// Categorical records stored as category indices into the column specs.
struct Dataset
{
  std::vector<VariableSpec> columns;
  std::vector<std::vector<std::uint32_t>> records;
  Provenance provenance = Provenance::Synthetic;

  std::optional<std::size_t> column(std::string_view name) const;
  std::size_t size() const { return records.size(); }
};

/**
 * Causal structure with per-node categorical specs and CPDs for an
 * instantiated subset N of the nodes.
 *
 * Queries run by exact enumeration over the ancestral closure of the
 * variables involved. When that closure lacks CPDs, an attached evidence
 * dataset answers purely observational queries by relative frequencies.
 */
class DiscreteModel
{
public:
  static constexpr std::uint64_t kDefaultStateSpaceLimit = std::uint64_t{1} << 24;

  DiscreteModel() = default;

  /// Throws InvalidCpd, UnknownNode, ValidationError.
  static DiscreteModel build(
    CausalStructure structure, std::vector<VariableSpec> specs, std::vector<Cpd> cpds);

  const CausalStructure & structure() const { return structure_; }
  const std::vector<VariableSpec> & specs() const { return specs_; }
  const VariableSpec & spec(NodeIndex i) const { return specs_.at(i); }
  const VariableSpec & spec(std::string_view name) const;

  bool has_cpd(NodeIndex i) const { return cpds_.at(i).has_value(); }
  /// Throws InsufficientInstantiation when i carries no CPD.
  const Cpd & cpd(NodeIndex i) const;
  std::vector<Cpd> cpds() const;

  NodeSet instantiated() const;
  /// Every non-latent node carries a CPD.
  bool fully_instantiated() const;

  const std::optional<Dataset> & evidence() const { return evidence_; }
  DiscreteModel with_evidence(Dataset d) const;

  std::uint64_t state_space_limit() const { return state_space_limit_; }
  DiscreteModel with_state_space_limit(std::uint64_t limit) const;

  /// Same structure and specs, CPD of `child` replaced.
  DiscreteModel with_cpd(Cpd cpd) const;

private:
  CausalStructure structure_;
  std::vector<VariableSpec> specs_;
  std::vector<std::optional<Cpd>> cpds_;
  std::optional<Dataset> evidence_;
  std::uint64_t state_space_limit_ = kDefaultStateSpaceLimit;
};

/// Node index -> category index.
using IndexAssignment = std::map<NodeIndex, std::size_t>;

IndexAssignment to_indices(const DiscreteModel & m, const Assignment & a);

/**
 * Exact distribution of `targets` (in the given order) conditioned on
 * `given`, in the model where every node of `clamped` has its mechanism
 * replaced by a point mass. Only CPDs of the pruned ancestral closure are
 * consulted.
 *
 * Throws InsufficientInstantiation, NotMarkovian, StateSpaceTooLarge,
 * ZeroProbabilityCondition.
 */
Distribution enumerate(
  const DiscreteModel & m, const std::vector<NodeIndex> & targets, const IndexAssignment & given,
  const IndexAssignment & clamped = {});

/// Relative-frequency counterpart of enumerate() over an evidence dataset.
/// Throws EmptyDataset, InsufficientInstantiation, ZeroProbabilityCondition.
Distribution empirical(
  const Dataset & d, const std::vector<std::string> & targets, const Assignment & given);

/// Joint probability of a full assignment. Throws NotFullyInstantiated,
/// UnknownCategory, UnknownNode.
double joint_probability(const DiscreteModel & m, const Assignment & assignment);

/// P(targets | given), targets in name order. Uses exact enumeration when the
/// needed CPDs exist and otherwise the evidence dataset.
Distribution marginal(const DiscreteModel & m, const NodeSet & targets, const Assignment & given = {});

/// Ancestral forward sampling; nodes in `clamped` take their fixed category.
/// Throws NotFullyInstantiated when a sampled node lacks a CPD.
Dataset sample(
  const DiscreteModel & m, std::size_t n, std::uint64_t seed, const Assignment & clamped = {});

struct EstimationResult
{
  DiscreteModel model;
  std::vector<std::string> warnings;
};

/**
 * Maximum-likelihood CPDs with additive smoothing for every node whose
 * column and parent columns are present in `d`. With alpha = 0 a node with an
 * unseen parent configuration is left uninstantiated and a warning names it.
 * The dataset is attached as evidence. Throws EmptyDataset, UnknownNode.
 */
EstimationResult estimate_cpds(
  const CausalStructure & s, const std::vector<VariableSpec> & specs, const Dataset & d,
  double alpha = 0.0);

}  // namespace critcausal

#endif  // CRITCAUSAL__DISCRETE_MODEL_HPP_
