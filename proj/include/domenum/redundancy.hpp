#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "domenum/errors.hpp"
#include "domenum/graph.hpp"

namespace domenum {

inline constexpr int kNoComponent = -1;

// Irredundant/redundant bipartition of V(G) and the irredundant components.
//
// A vertex v is redundant iff some u != v has N[u] strictly inside N[v], or
// N[u] == N[v] with u < v. Among vertices with equal closed neighborhoods the
// one of minimum index is the irredundant representative.
struct Classification {
  VertexSet ir;
  VertexSet rn;
  std::vector<Vertex> witness;        // irredundant x with N[x] in N[y], per redundant y
  std::vector<VertexSet> components;  // components of G[IR], ordered by minimum vertex
  std::vector<int> comp_of;           // component index, kNoComponent for redundant vertices
  std::vector<int> partial;           // C^a: the component a redundant a is partially adjacent to
  VertexSet multi_partial;            // redundant vertices partially adjacent to 2+ components

  bool is_irredundant(Vertex v) const { return comp_of[v] != kNoComponent; }
  int component_count() const { return static_cast<int>(components.size()); }
};

namespace detail {

// N[u] is contained in N[v]; u and v adjacent or equal.
inline bool closed_subset(const Graph& g, Vertex u, Vertex v) {
  if (g.degree(u) > g.degree(v)) return false;
  for (Vertex w : g.neighbors(u))
    if (w != v && !g.adjacent(v, w)) return false;
  return true;
}

}  // namespace detail

// With `certified_p9_free`, a redundant vertex partially adjacent to two
// irredundant components is reported as a ClassError.
inline Classification classify(const Graph& g, bool certified_p9_free = false) {
  const Vertex n = g.n();
  Classification cls;
  cls.witness.assign(static_cast<std::size_t>(n), kNoVertex);
  cls.comp_of.assign(static_cast<std::size_t>(n), kNoComponent);
  cls.partial.assign(static_cast<std::size_t>(n), kNoComponent);

  // dominated_by[v]: a vertex making v redundant, chosen with the smallest
  // neighborhood so witness chains stay short.
  std::vector<Vertex> dominated_by(static_cast<std::size_t>(n), kNoVertex);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u : g.neighbors(v)) {
      if (!detail::closed_subset(g, u, v)) continue;
      bool strict = g.degree(u) < g.degree(v);
      if (!strict && u > v) continue;
      Vertex& cur = dominated_by[v];
      if (cur == kNoVertex || g.degree(u) < g.degree(cur) || (g.degree(u) == g.degree(cur) && u < cur)) cur = u;
    }
  }

  std::vector<Vertex> ir, rn;
  for (Vertex v = 0; v < n; ++v) (dominated_by[v] == kNoVertex ? ir : rn).push_back(v);
  cls.ir = VertexSet::from_sorted(std::move(ir));
  cls.rn = VertexSet::from_sorted(std::move(rn));

  // Each step strictly decreases (|N[x]|, x), so the chain ends at an irredundant vertex.
  for (Vertex y : cls.rn) {
    Vertex x = dominated_by[y];
    while (dominated_by[x] != kNoVertex) x = dominated_by[x];
    cls.witness[y] = x;
  }

  cls.components = connected_components(g, cls.ir);
  for (int i = 0; i < cls.component_count(); ++i)
    for (Vertex v : cls.components[i]) cls.comp_of[v] = i;

  std::vector<int> hits(cls.components.size(), 0);
  std::vector<Vertex> multi;
  for (Vertex a : cls.rn) {
    std::vector<int> touched;
    for (Vertex w : g.neighbors(a)) {
      int c = cls.comp_of[w];
      if (c == kNoComponent) continue;
      if (hits[c]++ == 0) touched.push_back(c);
    }
    std::sort(touched.begin(), touched.end());
    int partial_count = 0;
    for (int c : touched) {
      if (hits[c] < static_cast<int>(cls.components[c].size())) {
        if (partial_count++ == 0) cls.partial[a] = c;
      }
      hits[c] = 0;
    }
    if (partial_count > 1) multi.push_back(a);
  }
  cls.multi_partial = VertexSet::from_sorted(std::move(multi));
  if (certified_p9_free && !cls.multi_partial.empty())
    throw ClassError("redundant vertex " + std::to_string(cls.multi_partial.front()) +
                     " is partially adjacent to two irredundant components; the graph is not P9-free chordal");
  return cls;
}

// {u : N[u] meets d exactly in x}; x may be its own private neighbor.
inline VertexSet private_neighbors(const Graph& g, const VertexSet& d, Vertex x) {
  std::vector<char> in_d(static_cast<std::size_t>(g.n()), 0);
  for (Vertex v : d) in_d[v] = 1;
  std::vector<Vertex> out;
  auto lone = [&](Vertex u) {
    int count = in_d[u];
    for (Vertex w : g.neighbors(u)) count += in_d[w];
    return count == 1;
  };
  if (lone(x)) out.push_back(x);
  for (Vertex u : g.neighbors(x))
    if (lone(u)) out.push_back(u);
  return VertexSet(std::move(out));
}

struct RedBluePartition {
  VertexSet blue;
  VertexSet red;
  std::map<int, VertexSet> red_by_component;  // component index -> R_i(A)
  std::map<Vertex, VertexSet> priv;           // a -> irredundant private neighbors of a w.r.t. A
};

// Blue elements keep an irredundant private neighbor inside a component that
// A dominates completely; all other elements are red.
inline RedBluePartition red_blue(const Graph& g, const Classification& cls, const VertexSet& a_set) {
  RedBluePartition out;
  std::vector<int> dominators(static_cast<std::size_t>(g.n()), 0);
  for (Vertex a : a_set) {
    ++dominators[a];
    for (Vertex w : g.neighbors(a)) ++dominators[w];
  }
  std::vector<char> full(cls.components.size(), 1);
  for (int i = 0; i < cls.component_count(); ++i)
    for (Vertex v : cls.components[i])
      if (dominators[v] == 0) {
        full[i] = 0;
        break;
      }
  for (Vertex a : a_set) {
    std::vector<Vertex> priv;
    bool blue = false;
    for (Vertex w : g.neighbors(a))
      if (cls.is_irredundant(w) && dominators[w] == 1) {
        priv.push_back(w);
        blue = blue || full[cls.comp_of[w]];
      }
    if (blue) out.blue.insert(a);
    else {
      out.red.insert(a);
      for (Vertex w : priv) out.red_by_component[cls.comp_of[w]].insert(a);
    }
    out.priv.emplace(a, VertexSet::from_sorted(std::move(priv)));
  }
  return out;
}

}  // namespace domenum
