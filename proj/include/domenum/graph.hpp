#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace domenum {

// Vertices are 0-based indices; the index order is the fixed total order used
// for every tie-break in the library.
using Vertex = std::int32_t;
inline constexpr Vertex kNoVertex = -1;

// Sorted, duplicate-free set of vertices.
class VertexSet {
public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> vs) : items_(vs) { normalize(); }
  explicit VertexSet(std::vector<Vertex> vs) : items_(std::move(vs)) { normalize(); }

  // Caller guarantees `vs` is strictly increasing.
  static VertexSet from_sorted(std::vector<Vertex> vs) {
    VertexSet s;
    s.items_ = std::move(vs);
    return s;
  }

  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  Vertex operator[](std::size_t i) const { return items_[i]; }
  Vertex front() const { return items_.front(); }
  Vertex back() const { return items_.back(); }
  const std::vector<Vertex>& items() const { return items_; }

  bool contains(Vertex v) const { return std::binary_search(items_.begin(), items_.end(), v); }

  void insert(Vertex v) {
    auto it = std::lower_bound(items_.begin(), items_.end(), v);
    if (it == items_.end() || *it != v) items_.insert(it, v);
  }

  void erase(Vertex v) {
    auto it = std::lower_bound(items_.begin(), items_.end(), v);
    if (it != items_.end() && *it == v) items_.erase(it);
  }

  VertexSet with(Vertex v) const {
    VertexSet s = *this;
    s.insert(v);
    return s;
  }

  VertexSet without(Vertex v) const {
    VertexSet s = *this;
    s.erase(v);
    return s;
  }

  friend VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet r;
    r.items_.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r.items_));
    return r;
  }

  friend VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet r;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r.items_));
    return r;
  }

  friend VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    VertexSet r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r.items_));
    return r;
  }

  bool is_subset_of(const VertexSet& other) const {
    return std::includes(other.begin(), other.end(), begin(), end());
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) { return a.items_ <=> b.items_; }

private:
  void normalize() {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
  }

  std::vector<Vertex> items_;
};

using Edge = std::pair<Vertex, Vertex>;

// Immutable simple graph: sorted neighbor lists plus an adjacency bit matrix
// for constant-time adjacency tests. Memory is O(n^2 / 8) bytes.
class Graph {
public:
  Graph() = default;

  // Throws std::invalid_argument on out-of-range endpoints, self-loops or
  // duplicate edges.
  Graph(Vertex n, std::span<const Edge> edges) : n_(n), adj_(static_cast<std::size_t>(n)) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    words_ = (static_cast<std::size_t>(n) + 63) / 64;
    bits_.assign(words_ * static_cast<std::size_t>(n), 0);
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw std::invalid_argument("edge endpoint out of range");
      if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
      if (adjacent(u, v))
        throw std::invalid_argument("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
      set_bit(u, v);
      set_bit(v, u);
      adj_[u].push_back(v);
      adj_[v].push_back(u);
      ++m_;
    }
    for (auto& row : adj_) std::sort(row.begin(), row.end());
  }

  Graph(Vertex n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  Vertex n() const { return n_; }
  std::size_t m() const { return m_; }

  bool adjacent(Vertex u, Vertex v) const {
    return (bits_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v) / 64] >>
            (static_cast<std::size_t>(v) % 64)) & 1U;
  }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

private:
  void set_bit(Vertex u, Vertex v) {
    bits_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v) / 64] |=
        std::uint64_t{1} << (static_cast<std::size_t>(v) % 64);
  }

  Vertex n_ = 0;
  std::size_t m_ = 0;
  std::size_t words_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint64_t> bits_;
};

inline VertexSet closed_neighborhood(const Graph& g, Vertex x) {
  std::vector<Vertex> out(g.neighbors(x).begin(), g.neighbors(x).end());
  out.insert(std::upper_bound(out.begin(), out.end(), x), x);
  return VertexSet::from_sorted(std::move(out));
}

inline VertexSet all_vertices(const Graph& g) {
  std::vector<Vertex> out(static_cast<std::size_t>(g.n()));
  for (Vertex v = 0; v < g.n(); ++v) out[v] = v;
  return VertexSet::from_sorted(std::move(out));
}

// Components of G[restrict], each sorted, ordered by their minimum vertex.
inline std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& restrict) {
  std::vector<char> allowed(static_cast<std::size_t>(g.n()), 0);
  for (Vertex v : restrict) allowed[v] = 1;
  std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
  std::vector<VertexSet> comps;
  std::vector<Vertex> stack;
  for (Vertex s : restrict) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v))
        if (allowed[w] && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    comps.emplace_back(std::move(comp));
  }
  return comps;
}

inline bool is_connected(const Graph& g) {
  return g.n() == 0 || connected_components(g, all_vertices(g)).size() == 1;
}

// True iff every vertex of `x` lies in N[d].
inline bool dominates(const Graph& g, const VertexSet& d, const VertexSet& x) {
  std::vector<char> dom(static_cast<std::size_t>(g.n()), 0);
  for (Vertex v : d) {
    dom[v] = 1;
    for (Vertex w : g.neighbors(v)) dom[w] = 1;
  }
  return std::all_of(x.begin(), x.end(), [&](Vertex v) { return dom[v] != 0; });
}

// G[vertices] relabelled 0..k-1 in ascending order of the original indices.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;  // local -> original
};

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& vertices) {
  std::vector<Vertex> local(static_cast<std::size_t>(g.n()), kNoVertex);
  Vertex k = 0;
  for (Vertex v : vertices) local[v] = k++;
  std::vector<Edge> edges;
  for (Vertex v : vertices)
    for (Vertex w : g.neighbors(v))
      if (v < w && local[w] != kNoVertex) edges.emplace_back(local[v], local[w]);
  return {Graph(k, edges), vertices.items()};
}

}  // namespace domenum
