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

#include "critcausal/separation.hpp"

#include "critcausal/error.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>

namespace critcausal
{
namespace
{

// Causal graph with every bidirected arc a <-> b replaced by an explicit
// latent fork a <- L -> b. Nodes [0, observed) mirror the structure, the
// synthetic fork nodes follow.
struct ExpandedGraph
{
  std::size_t observed = 0;
  std::vector<std::vector<NodeIndex>> parents;
  std::vector<std::vector<NodeIndex>> children;

  std::size_t size() const { return parents.size(); }
};

ExpandedGraph expand(const CausalStructure & s, std::optional<NodeIndex> drop_outgoing = {})
{
  ExpandedGraph g;
  g.observed = s.size();
  g.parents.resize(s.size());
  g.children.resize(s.size());
  for (const auto & [from, to] : s.directed_edges()) {
    if (drop_outgoing && *drop_outgoing == from) {
      continue;
    }
    g.children[from].push_back(to);
    g.parents[to].push_back(from);
  }
  for (const auto & [a, b] : s.bidirected_edges()) {
    const NodeIndex fork = g.parents.size();
    g.parents.push_back({});
    g.children.push_back({a, b});
    g.parents[a].push_back(fork);
    g.parents[b].push_back(fork);
  }
  return g;
}

NodeMask widen(const NodeMask & m, std::size_t n)
{
  NodeMask out(n, false);
  std::copy(m.begin(), m.end(), out.begin());
  return out;
}

NodeMask ancestors_of(const ExpandedGraph & g, const NodeMask & from)
{
  NodeMask seen = from;
  std::deque<NodeIndex> queue;
  for (NodeIndex i = 0; i < g.size(); ++i) {
    if (from[i]) {
      queue.push_back(i);
    }
  }
  while (!queue.empty()) {
    const NodeIndex i = queue.front();
    queue.pop_front();
    for (NodeIndex p : g.parents[i]) {
      if (!seen[p]) {
        seen[p] = true;
        queue.push_back(p);
      }
    }
  }
  return seen;
}

// Bayes-ball reachability: every node joined to some x by an active trail given z.
NodeMask reachable(const ExpandedGraph & g, const NodeMask & x, const NodeMask & z)
{
  const NodeMask z_ancestors = ancestors_of(g, z);
  enum Direction { kUp = 0, kDown = 1 };
  std::vector<std::array<bool, 2>> visited(g.size(), {false, false});
  NodeMask reach(g.size(), false);
  std::deque<std::pair<NodeIndex, Direction>> queue;
  for (NodeIndex i = 0; i < g.size(); ++i) {
    if (x[i]) {
      queue.emplace_back(i, kUp);
    }
  }
  while (!queue.empty()) {
    const auto [v, dir] = queue.front();
    queue.pop_front();
    if (visited[v][dir]) {
      continue;
    }
    visited[v][dir] = true;
    if (!z[v]) {
      reach[v] = true;
    }
    if (dir == kUp && !z[v]) {
      for (NodeIndex p : g.parents[v]) {
        queue.emplace_back(p, kUp);
      }
      for (NodeIndex c : g.children[v]) {
        queue.emplace_back(c, kDown);
      }
    } else if (dir == kDown) {
      if (!z[v]) {
        for (NodeIndex c : g.children[v]) {
          queue.emplace_back(c, kDown);
        }
      }
      if (z_ancestors[v]) {
        for (NodeIndex p : g.parents[v]) {
          queue.emplace_back(p, kUp);
        }
      }
    }
  }
  return reach;
}

bool separated_in(const ExpandedGraph & g, const NodeMask & x, const NodeMask & y, const NodeMask & z)
{
  const NodeMask reach = reachable(g, widen(x, g.size()), widen(z, g.size()));
  for (NodeIndex i = 0; i < y.size(); ++i) {
    if (y[i] && reach[i]) {
      return false;
    }
  }
  return true;
}

// Depth-first search for a simple active path. Failed (node, arrival) states
// are memoized, which can in rare cases hide a path through a node already
// on the stack; the caller then retries without the memo.
class WitnessSearch
{
public:
  WitnessSearch(const ExpandedGraph & g, const NodeMask & x, const NodeMask & y, const NodeMask & z)
  : g_(g), x_(x), y_(y), z_(z), on_path_(g.size(), false)
  {
    NodeMask relevant_seed(g.size(), false);
    for (NodeIndex i = 0; i < g.size(); ++i) {
      relevant_seed[i] = x_[i] || y_[i] || z_[i];
    }
    relevant_ = ancestors_of(g, relevant_seed);
    z_ancestors_ = ancestors_of(g, z_);
  }

  std::optional<std::vector<NodeIndex>> run(bool use_memo)
  {
    use_memo_ = use_memo;
    failed_.assign(g_.size(), {false, false});
    for (NodeIndex start = 0; start < g_.size(); ++start) {
      if (!x_[start]) {
        continue;
      }
      path_ = {start};
      on_path_[start] = true;
      const bool found = extend(start, false);
      on_path_[start] = false;
      if (found) {
        return path_;
      }
    }
    return std::nullopt;
  }

private:
  bool extend(NodeIndex v, bool arrived_into_v)
  {
    const bool is_start = path_.size() == 1;
    auto try_step = [&](NodeIndex w, bool edge_into_w) {
      if (on_path_[w] || !relevant_[w] || (x_[w] && !y_[w])) {
        return false;
      }
      if (!is_start) {
        const bool collider = arrived_into_v && !edge_into_w;
        if (collider ? !z_ancestors_[v] : static_cast<bool>(z_[v])) {
          return false;
        }
      }
      path_.push_back(w);
      if (y_[w]) {
        return true;
      }
      if (use_memo_ && failed_[w][edge_into_w ? 1 : 0]) {
        path_.pop_back();
        return false;
      }
      on_path_[w] = true;
      const bool found = extend(w, edge_into_w);
      on_path_[w] = false;
      if (!found) {
        failed_[w][edge_into_w ? 1 : 0] = true;
        path_.pop_back();
      }
      return found;
    };
    for (NodeIndex p : g_.parents[v]) {
      if (try_step(p, false)) {
        return true;
      }
    }
    for (NodeIndex c : g_.children[v]) {
      if (try_step(c, true)) {
        return true;
      }
    }
    return false;
  }

  const ExpandedGraph & g_;
  NodeMask x_, y_, z_;
  NodeMask relevant_, z_ancestors_;
  NodeMask on_path_;
  std::vector<std::array<bool, 2>> failed_;
  std::vector<NodeIndex> path_;
  bool use_memo_ = true;
};

NodeMask checked_mask(const CausalStructure & s, const NodeSet & names)
{
  return s.mask(names);
}

// Existence test for a separator Z with required <= Z <= allowed: the
// canonical candidate An(x, y, required) restricted to allowed separates iff
// any such Z does.
bool separator_exists(
  const ExpandedGraph & g, const NodeMask & x, const NodeMask & y, const NodeMask & required,
  const NodeMask & allowed)
{
  NodeMask seed(g.size(), false);
  for (NodeIndex i = 0; i < x.size(); ++i) {
    seed[i] = x[i] || y[i] || required[i];
  }
  const NodeMask closure = ancestors_of(g, seed);
  NodeMask candidate(x.size(), false);
  for (NodeIndex i = 0; i < x.size(); ++i) {
    candidate[i] = closure[i] && allowed[i];
  }
  return separated_in(g, x, y, candidate);
}

struct AdjustmentProblem
{
  ExpandedGraph backdoor_graph;
  NodeMask x_mask, y_mask;
  /// Observable non-descendants of x other than x and y, in name order.
  std::vector<NodeIndex> candidates;
};

AdjustmentProblem make_problem(const CausalStructure & s, NodeIndex x, NodeIndex y)
{
  AdjustmentProblem p;
  p.backdoor_graph = expand(s, x);
  p.x_mask.assign(s.size(), false);
  p.y_mask.assign(s.size(), false);
  p.x_mask[x] = true;
  p.y_mask[y] = true;
  const NodeMask de = descendant_mask(s, x);
  for (NodeIndex i = 0; i < s.size(); ++i) {
    if (i != x && i != y && !s.is_latent(i) && !de[i]) {
      p.candidates.push_back(i);
    }
  }
  return p;
}

bool set_less(const std::vector<NodeIndex> & a, const std::vector<NodeIndex> & b)
{
  if (a.size() != b.size()) {
    return a.size() < b.size();
  }
  return a < b;
}

std::vector<std::vector<NodeIndex>> exhaustive_sets(
  const AdjustmentProblem & p, std::size_t node_count, std::size_t max_count)
{
  std::vector<std::vector<NodeIndex>> out;
  const auto & cand = p.candidates;
  NodeMask all_allowed(node_count, false);
  for (NodeIndex c : cand) {
    all_allowed[c] = true;
  }
  if (max_count == 0 ||
      !separator_exists(p.backdoor_graph, p.x_mask, p.y_mask, NodeMask(node_count, false), all_allowed)) {
    return out;
  }
  std::vector<NodeIndex> chosen;
  NodeMask chosen_mask(node_count, false);

  std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t next, std::size_t k) {
    if (out.size() >= max_count) {
      return;
    }
    if (chosen.size() == k) {
      if (separated_in(p.backdoor_graph, p.x_mask, p.y_mask, chosen_mask)) {
        out.push_back(chosen);
      }
      return;
    }
    if (chosen.size() + (cand.size() - next) < k) {
      return;
    }
    NodeMask allowed = chosen_mask;
    for (std::size_t j = next; j < cand.size(); ++j) {
      allowed[cand[j]] = true;
    }
    if (!separator_exists(p.backdoor_graph, p.x_mask, p.y_mask, chosen_mask, allowed)) {
      return;
    }
    for (std::size_t j = next; j < cand.size() && out.size() < max_count; ++j) {
      chosen.push_back(cand[j]);
      chosen_mask[cand[j]] = true;
      walk(j + 1, k);
      chosen_mask[cand[j]] = false;
      chosen.pop_back();
    }
  };
  for (std::size_t k = 0; k <= cand.size() && out.size() < max_count; ++k) {
    walk(0, k);
  }
  return out;
}

// Undirected graph given as sorted adjacency sets.
using UGraph = std::vector<std::set<NodeIndex>>;

std::set<NodeIndex> component(const UGraph & h, NodeIndex start, const std::vector<bool> & blocked)
{
  std::set<NodeIndex> comp{start};
  std::deque<NodeIndex> queue{start};
  while (!queue.empty()) {
    const NodeIndex v = queue.front();
    queue.pop_front();
    for (NodeIndex w : h[v]) {
      if (!blocked[w] && comp.insert(w).second) {
        queue.push_back(w);
      }
    }
  }
  return comp;
}

std::set<NodeIndex> boundary(const UGraph & h, const std::set<NodeIndex> & c)
{
  std::set<NodeIndex> out;
  for (NodeIndex v : c) {
    for (NodeIndex w : h[v]) {
      if (!c.count(w)) {
        out.insert(w);
      }
    }
  }
  return out;
}

// Minimal a-b vertex separators: start from the separator closest to a and
// move one separator vertex at a time onto the a side.
std::vector<std::set<NodeIndex>> minimal_vertex_separators(
  const UGraph & h, NodeIndex a, NodeIndex b)
{
  std::vector<std::set<NodeIndex>> found;
  if (h[a].count(b)) {
    return found;
  }
  const std::size_t n = h.size();
  auto separator_from_side = [&](const std::set<NodeIndex> & side) -> std::optional<std::set<NodeIndex>> {
    std::vector<bool> blocked(n, false);
    for (NodeIndex v : side) {
      blocked[v] = true;
      for (NodeIndex w : h[v]) {
        blocked[w] = true;
      }
    }
    if (blocked[b]) {
      return std::nullopt;
    }
    return boundary(h, component(h, b, blocked));
  };

  std::set<std::set<NodeIndex>> seen;
  std::deque<std::set<NodeIndex>> queue;
  if (auto first = separator_from_side({a})) {
    seen.insert(*first);
    queue.push_back(*first);
  }
  while (!queue.empty()) {
    const std::set<NodeIndex> sep = queue.front();
    queue.pop_front();
    found.push_back(sep);
    std::vector<bool> blocked(n, false);
    for (NodeIndex v : sep) {
      blocked[v] = true;
    }
    const std::set<NodeIndex> a_side = component(h, a, blocked);
    for (NodeIndex v : sep) {
      if (h[v].count(b)) {
        continue;
      }
      std::set<NodeIndex> side = a_side;
      side.insert(v);
      if (auto next = separator_from_side(side)) {
        if (seen.insert(*next).second) {
          queue.push_back(*next);
        }
      }
    }
  }
  return found;
}

std::vector<std::vector<NodeIndex>> minimal_sets(
  const AdjustmentProblem & p, NodeIndex x, NodeIndex y, std::size_t node_count)
{
  const ExpandedGraph & g = p.backdoor_graph;
  NodeMask seed(g.size(), false);
  seed[x] = seed[y] = true;
  const NodeMask relevant = ancestors_of(g, seed);

  UGraph moral(g.size());
  for (NodeIndex v = 0; v < g.size(); ++v) {
    if (!relevant[v]) {
      continue;
    }
    const auto & pa = g.parents[v];
    for (std::size_t i = 0; i < pa.size(); ++i) {
      moral[v].insert(pa[i]);
      moral[pa[i]].insert(v);
      for (std::size_t j = i + 1; j < pa.size(); ++j) {
        moral[pa[i]].insert(pa[j]);
        moral[pa[j]].insert(pa[i]);
      }
    }
  }
  NodeMask allowed(g.size(), false);
  for (NodeIndex c : p.candidates) {
    allowed[c] = true;
  }
  // Nodes that may not enter a separator are eliminated: their neighbours
  // become pairwise adjacent, preserving every route through them.
  for (NodeIndex v = 0; v < g.size(); ++v) {
    if (!relevant[v] || allowed[v] || v == x || v == y) {
      continue;
    }
    std::vector<NodeIndex> nb(moral[v].begin(), moral[v].end());
    for (NodeIndex w : nb) {
      moral[w].erase(v);
    }
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        moral[nb[i]].insert(nb[j]);
        moral[nb[j]].insert(nb[i]);
      }
    }
    moral[v].clear();
  }
  std::vector<std::vector<NodeIndex>> out;
  for (const auto & sep : minimal_vertex_separators(moral, x, y)) {
    std::vector<NodeIndex> members(sep.begin(), sep.end());
    if (std::all_of(members.begin(), members.end(), [&](NodeIndex m) { return m < node_count; })) {
      out.push_back(std::move(members));
    }
  }
  return out;
}

}  // namespace

bool is_d_separated(
  const CausalStructure & s, const NodeMask & x, const NodeMask & y, const NodeMask & z)
{
  return separated_in(expand(s), x, y, z);
}

PathQueryResult d_separated(
  const CausalStructure & s, const NodeSet & x, const NodeSet & y, const NodeSet & z)
{
  const NodeMask xm = checked_mask(s, x);
  const NodeMask ym = checked_mask(s, y);
  const NodeMask zm = checked_mask(s, z);
  for (NodeIndex i = 0; i < s.size(); ++i) {
    if ((xm[i] && ym[i]) || (xm[i] && zm[i]) || (ym[i] && zm[i])) {
      throw Error(
        ErrorCode::OverlappingSets, "node '" + s.name(i) + "' appears in more than one set");
    }
  }
  const ExpandedGraph g = expand(s);
  PathQueryResult result;
  result.separated = separated_in(g, xm, ym, zm);
  if (result.separated) {
    return result;
  }
  WitnessSearch search(g, widen(xm, g.size()), widen(ym, g.size()), widen(zm, g.size()));
  auto path = search.run(true);
  if (!path) {
    path = search.run(false);
  }
  if (path) {
    std::vector<std::string> names;
    for (NodeIndex v : *path) {
      if (v < s.size()) {
        names.push_back(s.name(v));
      }
    }
    result.witness_path = std::move(names);
  }
  return result;
}

bool backdoor_admissible(
  const CausalStructure & s, const NodeSet & adjustment, std::string_view x, std::string_view y)
{
  const NodeIndex xi = s.index(x);
  const NodeIndex yi = s.index(y);
  const NodeMask z = s.mask(adjustment);
  if (z[xi] || z[yi]) {
    throw Error(ErrorCode::OverlappingSets, "adjustment set may not contain the treatment or outcome");
  }
  const NodeMask de = descendant_mask(s, xi);
  for (NodeIndex i = 0; i < s.size(); ++i) {
    if (z[i] && (s.is_latent(i) || de[i])) {
      return false;
    }
  }
  NodeMask xm(s.size(), false), ym(s.size(), false);
  xm[xi] = true;
  ym[yi] = true;
  return separated_in(expand(s, xi), xm, ym, z);
}

std::vector<NodeSet> enumerate_adjustment_sets(
  const CausalStructure & s, std::string_view x, std::string_view y,
  const AdjustmentOptions & options)
{
  const NodeIndex xi = s.index(x);
  const NodeIndex yi = s.index(y);
  if (xi == yi) {
    throw Error(ErrorCode::OverlappingSets, "treatment and outcome must differ");
  }
  if (s.is_latent(xi) || s.is_latent(yi)) {
    throw Error(ErrorCode::InvalidArgument, "treatment and outcome must be observable");
  }
  const AdjustmentProblem problem = make_problem(s, xi, yi);
  std::vector<std::vector<NodeIndex>> sets;
  if (options.minimal_only) {
    sets = minimal_sets(problem, xi, yi, s.size());
    std::sort(sets.begin(), sets.end(), set_less);
    if (sets.size() > options.max_count) {
      sets.resize(options.max_count);
    }
  } else {
    sets = exhaustive_sets(problem, s.size(), options.max_count);
  }
  std::vector<NodeSet> out;
  out.reserve(sets.size());
  for (const auto & members : sets) {
    out.push_back(s.names(members));
  }
  return out;
}

}  // namespace critcausal
