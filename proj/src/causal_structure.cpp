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

#include "critcausal/causal_structure.hpp"

#include "critcausal/error.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace critcausal
{
namespace
{

std::string describe_cycle(
  const std::vector<std::string> & names, const std::vector<std::vector<NodeIndex>> & children,
  const std::vector<std::size_t> & remaining_in_degree)
{
  // Walk forward inside the residual (cyclic) subgraph until a node repeats.
  const std::size_t n = names.size();
  NodeIndex start = n;
  for (NodeIndex i = 0; i < n; ++i) {
    if (remaining_in_degree[i] > 0) {
      start = i;
      break;
    }
  }
  std::vector<std::size_t> seen_at(n, n);
  std::vector<NodeIndex> walk;
  NodeIndex current = start;
  while (seen_at[current] == n) {
    seen_at[current] = walk.size();
    walk.push_back(current);
    for (NodeIndex c : children[current]) {
      if (remaining_in_degree[c] > 0) {
        current = c;
        break;
      }
    }
  }
  std::string text;
  for (std::size_t k = seen_at[current]; k < walk.size(); ++k) {
    text += names[walk[k]] + " -> ";
  }
  return text + names[current];
}

void insert_sorted(std::vector<NodeIndex> & v, NodeIndex i)
{
  v.insert(std::lower_bound(v.begin(), v.end(), i), i);
}

}  // namespace

CausalStructure CausalStructure::build(
  std::vector<NodeDecl> nodes, const std::vector<EdgeDecl> & directed,
  const std::vector<EdgeDecl> & bidirected)
{
  std::sort(nodes.begin(), nodes.end(), [](const NodeDecl & a, const NodeDecl & b) {
    return a.name < b.name;
  });
  CausalStructure s;
  const std::size_t n = nodes.size();
  for (NodeIndex i = 0; i < n; ++i) {
    if (nodes[i].name.empty()) {
      throw Error(ErrorCode::InvalidArgument, "node names must be non-empty");
    }
    if (i > 0 && nodes[i].name == nodes[i - 1].name) {
      throw Error(ErrorCode::DuplicateNode, "node '" + nodes[i].name + "' declared twice");
    }
    s.names_.push_back(nodes[i].name);
    s.latent_.push_back(nodes[i].latent);
    s.lookup_.emplace(nodes[i].name, i);
  }
  s.parents_.assign(n, {});
  s.children_.assign(n, {});
  s.spouses_.assign(n, {});

  auto endpoint = [&s](const std::string & name, const char * kind) {
    auto it = s.lookup_.find(name);
    if (it == s.lookup_.end()) {
      throw Error(
        ErrorCode::UnknownEndpoint,
        std::string(kind) + " edge endpoint '" + name + "' is not a declared node");
    }
    return it->second;
  };

  std::set<std::pair<NodeIndex, NodeIndex>> directed_seen;
  for (const auto & [from_name, to_name] : directed) {
    const NodeIndex from = endpoint(from_name, "directed");
    const NodeIndex to = endpoint(to_name, "directed");
    if (from == to) {
      throw Error(ErrorCode::SelfLoop, "directed self-loop on '" + from_name + "'");
    }
    if (!directed_seen.emplace(from, to).second) {
      continue;
    }
    insert_sorted(s.children_[from], to);
    insert_sorted(s.parents_[to], from);
  }
  std::set<std::pair<NodeIndex, NodeIndex>> bidirected_seen;
  for (const auto & [a_name, b_name] : bidirected) {
    const NodeIndex a = endpoint(a_name, "bidirected");
    const NodeIndex b = endpoint(b_name, "bidirected");
    if (a == b) {
      throw Error(ErrorCode::SelfLoop, "bidirected self-loop on '" + a_name + "'");
    }
    if (!bidirected_seen.emplace(std::min(a, b), std::max(a, b)).second) {
      continue;
    }
    insert_sorted(s.spouses_[a], b);
    insert_sorted(s.spouses_[b], a);
  }

  // Kahn's algorithm; ties broken by name for a deterministic order.
  std::vector<std::size_t> in_degree(n);
  std::set<NodeIndex> ready;
  for (NodeIndex i = 0; i < n; ++i) {
    in_degree[i] = s.parents_[i].size();
    if (in_degree[i] == 0) {
      ready.insert(i);
    }
  }
  while (!ready.empty()) {
    const NodeIndex i = *ready.begin();
    ready.erase(ready.begin());
    s.topo_.push_back(i);
    for (NodeIndex c : s.children_[i]) {
      if (--in_degree[c] == 0) {
        ready.insert(c);
      }
    }
  }
  if (s.topo_.size() != n) {
    throw Error(
      ErrorCode::CycleDetected, "directed cycle " + describe_cycle(s.names_, s.children_, in_degree));
  }
  return s;
}

std::optional<NodeIndex> CausalStructure::find(std::string_view name) const
{
  auto it = lookup_.find(std::string(name));
  if (it == lookup_.end()) {
    return std::nullopt;
  }
  return it->second;
}

NodeIndex CausalStructure::index(std::string_view name) const
{
  if (auto i = find(name)) {
    return *i;
  }
  throw Error(ErrorCode::UnknownNode, "unknown node '" + std::string(name) + "'");
}

std::vector<NodeIndex> CausalStructure::indices(const NodeSet & names) const
{
  std::vector<NodeIndex> out;
  out.reserve(names.size());
  for (const auto & n : names) {
    out.push_back(index(n));
  }
  std::sort(out.begin(), out.end());
  return out;
}

NodeMask CausalStructure::mask(const NodeSet & names) const
{
  NodeMask m(size(), false);
  for (const auto & n : names) {
    m[index(n)] = true;
  }
  return m;
}

NodeSet CausalStructure::names(const NodeMask & mask) const
{
  NodeSet out;
  for (NodeIndex i = 0; i < mask.size() && i < size(); ++i) {
    if (mask[i]) {
      out.insert(names_[i]);
    }
  }
  return out;
}

NodeSet CausalStructure::names(const std::vector<NodeIndex> & nodes) const
{
  NodeSet out;
  for (NodeIndex i : nodes) {
    out.insert(names_.at(i));
  }
  return out;
}

std::vector<std::pair<NodeIndex, NodeIndex>> CausalStructure::directed_edges() const
{
  std::vector<std::pair<NodeIndex, NodeIndex>> out;
  for (NodeIndex i = 0; i < size(); ++i) {
    for (NodeIndex c : children_[i]) {
      out.emplace_back(i, c);
    }
  }
  return out;
}

std::vector<std::pair<NodeIndex, NodeIndex>> CausalStructure::bidirected_edges() const
{
  std::vector<std::pair<NodeIndex, NodeIndex>> out;
  for (NodeIndex i = 0; i < size(); ++i) {
    for (NodeIndex j : spouses_[i]) {
      if (i < j) {
        out.emplace_back(i, j);
      }
    }
  }
  return out;
}

std::size_t CausalStructure::directed_edge_count() const
{
  std::size_t count = 0;
  for (const auto & c : children_) {
    count += c.size();
  }
  return count;
}

bool CausalStructure::is_markovian() const
{
  return std::all_of(spouses_.begin(), spouses_.end(), [](const auto & v) { return v.empty(); });
}

std::vector<NodeDecl> CausalStructure::node_decls() const
{
  std::vector<NodeDecl> out;
  for (NodeIndex i = 0; i < size(); ++i) {
    out.push_back({names_[i], latent_[i]});
  }
  return out;
}

CausalStructure CausalStructure::with_latent(const NodeSet & names, bool latent) const
{
  CausalStructure copy = *this;
  for (const auto & n : names) {
    copy.latent_[index(n)] = latent;
  }
  return copy;
}

CausalStructure CausalStructure::without_edges(
  const std::vector<std::pair<NodeIndex, NodeIndex>> & edges) const
{
  CausalStructure copy = *this;
  for (const auto & [from, to] : edges) {
    auto & ch = copy.children_.at(from);
    ch.erase(std::remove(ch.begin(), ch.end(), to), ch.end());
    auto & pa = copy.parents_.at(to);
    pa.erase(std::remove(pa.begin(), pa.end(), from), pa.end());
  }
  // Removing edges keeps any topological order valid.
  return copy;
}

bool CausalStructure::operator==(const CausalStructure & other) const
{
  return names_ == other.names_ && latent_ == other.latent_ && parents_ == other.parents_ &&
         spouses_ == other.spouses_;
}

NodeMask descendant_mask(const CausalStructure & s, NodeIndex n)
{
  NodeMask seen(s.size(), false);
  std::deque<NodeIndex> queue{n};
  while (!queue.empty()) {
    const NodeIndex i = queue.front();
    queue.pop_front();
    for (NodeIndex c : s.children(i)) {
      if (!seen[c]) {
        seen[c] = true;
        queue.push_back(c);
      }
    }
  }
  seen[n] = false;
  return seen;
}

NodeMask ancestral_closure(const CausalStructure & s, const NodeMask & from)
{
  NodeMask seen(s.size(), false);
  std::deque<NodeIndex> queue;
  for (NodeIndex i = 0; i < s.size(); ++i) {
    if (from[i]) {
      seen[i] = true;
      queue.push_back(i);
    }
  }
  while (!queue.empty()) {
    const NodeIndex i = queue.front();
    queue.pop_front();
    for (NodeIndex p : s.parents(i)) {
      if (!seen[p]) {
        seen[p] = true;
        queue.push_back(p);
      }
    }
  }
  return seen;
}

NodeSet descendants(const CausalStructure & s, std::string_view n)
{
  return s.names(descendant_mask(s, s.index(n)));
}

NodeSet ancestors(const CausalStructure & s, std::string_view n)
{
  const NodeIndex i = s.index(n);
  NodeMask from(s.size(), false);
  from[i] = true;
  NodeMask closure = ancestral_closure(s, from);
  closure[i] = false;
  return s.names(closure);
}

CausalStructure do_surgery(const CausalStructure & s, const NodeSet & targets)
{
  const auto target_idx = s.indices(targets);
  std::vector<EdgeDecl> directed;
  for (const auto & [from, to] : s.directed_edges()) {
    if (!std::binary_search(target_idx.begin(), target_idx.end(), to)) {
      directed.emplace_back(s.name(from), s.name(to));
    }
  }
  std::vector<EdgeDecl> bidirected;
  for (const auto & [a, b] : s.bidirected_edges()) {
    if (!std::binary_search(target_idx.begin(), target_idx.end(), a) &&
        !std::binary_search(target_idx.begin(), target_idx.end(), b)) {
      bidirected.emplace_back(s.name(a), s.name(b));
    }
  }
  return CausalStructure::build(s.node_decls(), directed, bidirected);
}

}  // namespace critcausal
