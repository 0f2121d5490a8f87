#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <vector>

#include "domenum/errors.hpp"
#include "domenum/graph.hpp"

namespace domenum {

struct ChordalityResult {
  bool chordal = true;
  std::vector<Vertex> hole;  // chordless cycle of length >= 4 when !chordal

  explicit operator bool() const { return chordal; }
};

namespace detail {

// Maximum cardinality search; returns vertices in visiting order.
inline std::vector<Vertex> mcs_order(const Graph& g) {
  const Vertex n = g.n();
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  std::vector<char> done(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<Vertex>> bucket(static_cast<std::size_t>(n) + 1);
  for (Vertex v = n - 1; v >= 0; --v) bucket[0].push_back(v);
  std::vector<Vertex> order;
  order.reserve(static_cast<std::size_t>(n));
  int top = 0;
  while (static_cast<Vertex>(order.size()) < n) {
    while (bucket[top].empty()) --top;
    Vertex v = bucket[top].back();
    bucket[top].pop_back();
    if (done[v] || weight[v] != top) continue;  // stale entry
    done[v] = 1;
    order.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      if (done[w]) continue;
      bucket[++weight[w]].push_back(w);
      top = std::max(top, weight[w]);
    }
  }
  return order;
}

// Shortest path from s to t avoiding vertices with blocked[] set.
inline std::vector<Vertex> shortest_path(const Graph& g, Vertex s, Vertex t, const std::vector<char>& blocked) {
  std::vector<Vertex> prev(static_cast<std::size_t>(g.n()), kNoVertex);
  std::queue<Vertex> q;
  prev[s] = s;
  q.push(s);
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop();
    if (v == t) break;
    for (Vertex w : g.neighbors(v))
      if (!blocked[w] && prev[w] == kNoVertex) {
        prev[w] = v;
        q.push(w);
      }
  }
  if (prev[t] == kNoVertex) return {};
  std::vector<Vertex> path;
  for (Vertex v = t; v != s; v = prev[v]) path.push_back(v);
  path.push_back(s);
  std::reverse(path.begin(), path.end());
  return path;
}

// A hole through v using its non-adjacent neighbors a and b, if one exists.
inline std::vector<Vertex> hole_through(const Graph& g, Vertex v, Vertex a, Vertex b) {
  std::vector<char> blocked(static_cast<std::size_t>(g.n()), 0);
  blocked[v] = 1;
  for (Vertex w : g.neighbors(v)) blocked[w] = 1;
  blocked[a] = blocked[b] = 0;
  auto path = shortest_path(g, a, b, blocked);
  if (path.empty()) return {};
  std::vector<Vertex> cycle{v};
  cycle.insert(cycle.end(), path.begin(), path.end());
  return cycle;
}

}  // namespace detail

// Chordality via maximum cardinality search and a perfect-elimination check;
// on failure a chordless cycle is extracted as witness.
inline ChordalityResult is_chordal(const Graph& g) {
  const Vertex n = g.n();
  auto visit = detail::mcs_order(g);
  std::vector<Vertex> pos(static_cast<std::size_t>(n));  // position in elimination order
  for (Vertex i = 0; i < n; ++i) pos[visit[i]] = n - 1 - i;

  std::optional<std::pair<Vertex, std::pair<Vertex, Vertex>>> violation;
  for (Vertex v = 0; v < n && !violation; ++v) {
    Vertex parent = kNoVertex;
    for (Vertex w : g.neighbors(v))
      if (pos[w] > pos[v] && (parent == kNoVertex || pos[w] < pos[parent])) parent = w;
    if (parent == kNoVertex) continue;
    for (Vertex w : g.neighbors(v))
      if (pos[w] > pos[v] && w != parent && !g.adjacent(w, parent)) {
        violation = {v, {parent, w}};
        break;
      }
  }
  if (!violation) return {};

  auto [v, pair] = *violation;
  auto cycle = detail::hole_through(g, v, pair.first, pair.second);
  for (Vertex u = 0; u < n && cycle.empty(); ++u) {
    auto nb = g.neighbors(u);
    for (std::size_t i = 0; i < nb.size() && cycle.empty(); ++i)
      for (std::size_t j = i + 1; j < nb.size() && cycle.empty(); ++j)
        if (!g.adjacent(nb[i], nb[j])) cycle = detail::hole_through(g, u, nb[i], nb[j]);
  }
  return {false, std::move(cycle)};
}

struct PathFreeResult {
  bool free = true;
  std::vector<Vertex> path;  // an induced path on k vertices when !free

  explicit operator bool() const { return free; }
};

inline constexpr std::uint64_t kDefaultPathBudget = 200'000'000;

// Exact search for an induced path on k vertices. Exponential in k; the
// search aborts with BudgetExceeded after `node_budget` extensions.
inline PathFreeResult is_pk_free(const Graph& g, int k, std::uint64_t node_budget = kDefaultPathBudget) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  const Vertex n = g.n();
  if (k > n) return {};
  std::vector<Vertex> path;
  std::vector<int> touch(static_cast<std::size_t>(n), 0);  // path vertices in N[w]
  std::uint64_t nodes = 0;

  auto push = [&](Vertex v) {
    path.push_back(v);
    ++touch[v];
    for (Vertex w : g.neighbors(v)) ++touch[w];
  };
  auto pop = [&] {
    Vertex v = path.back();
    path.pop_back();
    --touch[v];
    for (Vertex w : g.neighbors(v)) --touch[w];
  };

  // Extensions of the current path; w extends it iff its only path neighbor is the last vertex.
  auto search = [&](auto&& self) -> bool {
    if (static_cast<int>(path.size()) == k) return true;
    if (++nodes > node_budget)
      throw BudgetExceeded("induced path search exceeded " + std::to_string(node_budget) + " nodes");
    for (Vertex w : g.neighbors(path.back())) {
      if (touch[w] != 1) continue;
      push(w);
      if (self(self)) return true;
      pop();
    }
    return false;
  };

  for (Vertex s = 0; s < n; ++s) {
    push(s);
    if (search(search)) return {false, path};
    pop();
  }
  return {};
}

// Rooted tree order of a connected trivially perfect graph: x is an ancestor
// of y iff x and y are adjacent and N[y] is contained in N[x].
struct TreePoset {
  Vertex root = kNoVertex;
  std::vector<Vertex> parent;                 // kNoVertex for the root
  std::vector<std::vector<Vertex>> children;  // ordered by minimum vertex of the subtree
  std::vector<Vertex> leaves;                 // ascending
  std::vector<int> depth;
  std::vector<int> tin, tout;  // preorder interval labels
  std::vector<Vertex> preorder;
  std::vector<int> pre_index;     // position in preorder
  std::vector<int> subtree_size;  // vertices in the subtree, itself included

  Vertex size() const { return static_cast<Vertex>(parent.size()); }

  // The subtree of v (v first) as a contiguous preorder slice.
  std::span<const Vertex> subtree(Vertex v) const {
    return std::span<const Vertex>(preorder).subspan(static_cast<std::size_t>(pre_index[v]),
                                                     static_cast<std::size_t>(subtree_size[v]));
  }

  // x <= y in the poset (x on the root-to-y path, x == y allowed).
  bool is_ancestor_or_self(Vertex x, Vertex y) const { return tin[x] <= tin[y] && tout[y] <= tout[x]; }
  bool comparable(Vertex x, Vertex y) const { return is_ancestor_or_self(x, y) || is_ancestor_or_self(y, x); }
  bool is_leaf(Vertex v) const { return children[v].empty(); }
};

struct NotTriviallyPerfect {
  enum class Kind { kP4, kC4 } kind;
  std::vector<Vertex> witness;
};

struct TreePosetResult {
  std::optional<TreePoset> poset;
  std::optional<NotTriviallyPerfect> failure;

  explicit operator bool() const { return poset.has_value(); }
};

// Completes a tree poset from its parent array (exactly one kNoVertex root).
// Children are ordered by the minimum vertex of their subtree.
inline TreePoset tree_poset_from_parents(std::vector<Vertex> parent) {
  TreePoset t;
  const Vertex n = static_cast<Vertex>(parent.size());
  t.parent = std::move(parent);
  t.children.assign(static_cast<std::size_t>(n), {});
  t.depth.assign(static_cast<std::size_t>(n), 0);
  if (n == 0) return t;
  for (Vertex v = 0; v < n; ++v) {
    if (t.parent[v] == kNoVertex) {
      if (t.root != kNoVertex) throw std::invalid_argument("tree poset has two roots");
      t.root = v;
    } else {
      if (t.parent[v] < 0 || t.parent[v] >= n) throw std::invalid_argument("parent out of range");
      t.children[t.parent[v]].push_back(v);
    }
  }
  if (t.root == kNoVertex) throw std::invalid_argument("tree poset has no root");
  std::vector<Vertex> sub_min(static_cast<std::size_t>(n));
  std::vector<Vertex> order;
  {
    std::vector<Vertex> stack{t.root};
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      order.push_back(v);
      for (Vertex c : t.children[v]) stack.push_back(c);
    }
    if (static_cast<Vertex>(order.size()) != n) throw std::invalid_argument("parent array is not a tree");
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      sub_min[*it] = *it;
      for (Vertex c : t.children[*it]) sub_min[*it] = std::min(sub_min[*it], sub_min[c]);
    }
  }
  for (auto& ch : t.children)
    std::sort(ch.begin(), ch.end(), [&](Vertex a, Vertex b) { return sub_min[a] < sub_min[b]; });

  for (Vertex v : order)
    if (v != t.root) t.depth[v] = t.depth[t.parent[v]] + 1;

  t.tin.assign(static_cast<std::size_t>(n), 0);
  t.tout.assign(static_cast<std::size_t>(n), 0);
  int clock = 0;
  std::vector<std::pair<Vertex, std::size_t>> stack{{t.root, 0}};
  t.tin[t.root] = clock++;
  t.preorder.push_back(t.root);
  while (!stack.empty()) {
    auto& top = stack.back();
    if (top.second < t.children[top.first].size()) {
      Vertex c = t.children[top.first][top.second++];
      t.tin[c] = clock++;
      t.preorder.push_back(c);
      stack.push_back({c, 0});
    } else {
      t.tout[top.first] = clock++;
      stack.pop_back();
    }
  }
  t.pre_index.assign(static_cast<std::size_t>(n), 0);
  t.subtree_size.assign(static_cast<std::size_t>(n), 1);
  for (int i = 0; i < n; ++i) t.pre_index[t.preorder[i]] = i;
  for (int i = n - 1; i > 0; --i) t.subtree_size[t.parent[t.preorder[i]]] += t.subtree_size[t.preorder[i]];
  for (Vertex v = 0; v < n; ++v)
    if (t.children[v].empty()) t.leaves.push_back(v);
  return t;
}

namespace detail {

// G[s] is connected without a universal vertex: exhibit an induced P4 or C4.
inline NotTriviallyPerfect tp_witness(const Graph& h, const std::vector<Vertex>& s, const std::vector<char>& in) {
  auto deg_in = [&](Vertex v) {
    int d = 0;
    for (Vertex w : h.neighbors(v)) d += in[w];
    return d;
  };
  Vertex v = s.front();
  for (Vertex u : s)
    if (deg_in(u) > deg_in(v)) v = u;
  // w at distance two from v through a.
  std::vector<char> blocked(static_cast<std::size_t>(h.n()), 1);
  for (Vertex u : s) blocked[u] = 0;
  Vertex far = kNoVertex;
  for (Vertex u : s)
    if (u != v && !h.adjacent(u, v)) {
      far = u;
      break;
    }
  auto path = shortest_path(h, v, far, blocked);
  if (path.size() >= 4) return {NotTriviallyPerfect::Kind::kP4, {path[0], path[1], path[2], path[3]}};
  Vertex a = path[1], w = path[2];
  for (Vertex u : h.neighbors(v))
    if (in[u] && u != a && !h.adjacent(u, a)) {
      if (h.adjacent(u, w)) return {NotTriviallyPerfect::Kind::kC4, {u, v, a, w}};
      return {NotTriviallyPerfect::Kind::kP4, {u, v, a, w}};
    }
  throw std::logic_error("tree poset witness search failed");
}

}  // namespace detail

// Recursive construction: the minimum-index universal vertex is the node,
// the components of the remainder become its subtrees.
inline TreePosetResult build_tree_poset(const Graph& h) {
  const Vertex n = h.n();
  TreePosetResult result;
  if (n == 0) {
    result.poset = TreePoset{};
    return result;
  }
  if (!is_connected(h)) throw std::invalid_argument("build_tree_poset requires a connected graph");
  TreePoset t;
  t.parent.assign(static_cast<std::size_t>(n), kNoVertex);
  t.children.assign(static_cast<std::size_t>(n), {});
  t.depth.assign(static_cast<std::size_t>(n), 0);

  struct Work {
    std::vector<Vertex> vertices;  // sorted
    Vertex parent;
  };
  std::vector<Work> work;
  work.push_back({all_vertices(h).items(), kNoVertex});
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  while (!work.empty()) {
    Work cur = std::move(work.back());
    work.pop_back();
    for (Vertex v : cur.vertices) in[v] = 1;
    const int size = static_cast<int>(cur.vertices.size());
    Vertex node = kNoVertex;
    for (Vertex v : cur.vertices) {
      int d = 0;
      for (Vertex w : h.neighbors(v)) d += in[w];
      if (d == size - 1) {
        node = v;
        break;
      }
    }
    if (node == kNoVertex) {
      result.failure = detail::tp_witness(h, cur.vertices, in);
      return result;
    }
    for (Vertex v : cur.vertices) in[v] = 0;
    t.parent[node] = cur.parent;
    if (cur.parent == kNoVertex) t.root = node;
    else {
      t.children[cur.parent].push_back(node);
      t.depth[node] = t.depth[cur.parent] + 1;
    }
    std::vector<Vertex> rest;
    rest.reserve(cur.vertices.size() - 1);
    for (Vertex v : cur.vertices)
      if (v != node) rest.push_back(v);
    if (rest.empty()) continue;
    auto comps = connected_components(h, VertexSet::from_sorted(std::move(rest)));
    // Pushed in reverse so the subtree with the smallest vertex is processed first.
    for (auto it = comps.rbegin(); it != comps.rend(); ++it) work.push_back({it->items(), node});
  }

  result.poset = tree_poset_from_parents(std::move(t.parent));
  return result;
}

// Two vertices are adjacent iff they are comparable in the poset.
inline Graph comparability_graph(const TreePoset& t) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < t.size(); ++v)
    for (Vertex u = t.parent[v]; u != kNoVertex; u = t.parent[u]) edges.emplace_back(std::min(u, v), std::max(u, v));
  return Graph(t.size(), edges);
}

}  // namespace domenum
