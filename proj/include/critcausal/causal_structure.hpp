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

#ifndef CRITCAUSAL__CAUSAL_STRUCTURE_HPP_
#define CRITCAUSAL__CAUSAL_STRUCTURE_HPP_

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace critcausal
{

using NodeIndex = std::size_t;
using NodeSet = std::set<std::string>;
/// Dense membership mask indexed by NodeIndex.
using NodeMask = std::vector<bool>;

struct NodeDecl
{
  std::string name;
  bool latent = false;
};

/// (from, to) for directed edges, unordered {a, b} for bidirected ones.
using EdgeDecl = std::pair<std::string, std::string>;

/**
 * Acyclic causal graph over named variables, with optional bidirected arcs
 * encoding correlated error terms.
 *
 * Nodes are stored sorted by name, so NodeIndex order equals name order and
 * every adjacency list is name-sorted. Instances are immutable once built.
 */
class CausalStructure
{
public:
  CausalStructure() = default;

  /// Validates and builds. Throws Error with CycleDetected (naming one cycle),
  /// DuplicateNode, UnknownEndpoint or SelfLoop.
  static CausalStructure build(
    std::vector<NodeDecl> nodes, const std::vector<EdgeDecl> & directed,
    const std::vector<EdgeDecl> & bidirected = {});

  std::size_t size() const { return names_.size(); }
  const std::string & name(NodeIndex i) const { return names_.at(i); }
  bool is_latent(NodeIndex i) const { return latent_.at(i); }

  std::optional<NodeIndex> find(std::string_view name) const;
  /// Throws UnknownNode.
  NodeIndex index(std::string_view name) const;
  std::vector<NodeIndex> indices(const NodeSet & names) const;
  NodeMask mask(const NodeSet & names) const;
  NodeSet names(const NodeMask & mask) const;
  NodeSet names(const std::vector<NodeIndex> & nodes) const;

  const std::vector<NodeIndex> & parents(NodeIndex i) const { return parents_.at(i); }
  const std::vector<NodeIndex> & children(NodeIndex i) const { return children_.at(i); }
  /// Nodes sharing a bidirected arc with i.
  const std::vector<NodeIndex> & confounded_with(NodeIndex i) const { return spouses_.at(i); }

  /// Sorted lexicographically by (from, to).
  std::vector<std::pair<NodeIndex, NodeIndex>> directed_edges() const;
  /// Sorted, each pair with first < second.
  std::vector<std::pair<NodeIndex, NodeIndex>> bidirected_edges() const;
  std::size_t directed_edge_count() const;

  const std::vector<NodeIndex> & topological_order() const { return topo_; }
  bool is_markovian() const;
  std::vector<NodeDecl> node_decls() const;

  /// Copy with the latent flag of `names` set to `latent`.
  CausalStructure with_latent(const NodeSet & names, bool latent) const;
  /// Copy with the given directed edges removed (bidirected arcs untouched).
  CausalStructure without_edges(const std::vector<std::pair<NodeIndex, NodeIndex>> & edges) const;

  bool operator==(const CausalStructure & other) const;

private:
  std::vector<std::string> names_;
  std::vector<bool> latent_;
  std::vector<std::vector<NodeIndex>> parents_;
  std::vector<std::vector<NodeIndex>> children_;
  std::vector<std::vector<NodeIndex>> spouses_;
  std::vector<NodeIndex> topo_;
  std::unordered_map<std::string, NodeIndex> lookup_;
};

/// Proper descendants of n along directed edges (n itself excluded).
NodeSet descendants(const CausalStructure & s, std::string_view n);
NodeSet ancestors(const CausalStructure & s, std::string_view n);

NodeMask descendant_mask(const CausalStructure & s, NodeIndex n);
/// Ancestors of every node in `from`, including the nodes of `from`.
NodeMask ancestral_closure(const CausalStructure & s, const NodeMask & from);

/// Removes every edge into each target, directed and bidirected.
CausalStructure do_surgery(const CausalStructure & s, const NodeSet & targets);

}  // namespace critcausal

#endif  // CRITCAUSAL__CAUSAL_STRUCTURE_HPP_
