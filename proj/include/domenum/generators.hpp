#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "domenum/errors.hpp"
#include "domenum/extension.hpp"
#include "domenum/graph.hpp"
#include "domenum/recognition.hpp"

namespace domenum {

// SplitMix64: 64-bit state, fixed output stream on every platform.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound), by rejection.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("empty range");
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do x = next();
    while (x >= limit);
    return x % bound;
  }

  // Uniform in [0, 1) with 53 bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool chance(double p) { return uniform() < p; }

  // Independent stream for item `index`, unaffected by draws on this one.
  SplitMix64 split(std::uint64_t index) const {
    SplitMix64 s(state_ ^ (0xd1b54a32d192ed03ULL * (index + 1)));
    s.next();
    return SplitMix64(s.next());
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

private:
  std::uint64_t state_;
};

inline constexpr std::uint64_t kDefaultSeed = 20240601;

// Each new vertex v attaches to a random subset of a maximal clique around a
// random earlier vertex u (u itself always included), so v is simplicial when
// added: the result is chordal and connected.
inline Graph gen_chordal(Vertex n, double density, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("gen_chordal needs n >= 1");
  SplitMix64 rng(seed);
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
  std::vector<std::vector<bool>> mat(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) {
    auto u = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(v)));
    std::vector<Vertex> cand = adj[u];
    rng.shuffle(cand);
    std::vector<Vertex> clique{u};
    for (Vertex w : cand)
      if (std::all_of(clique.begin(), clique.end(), [&](Vertex x) { return mat[w][x]; })) clique.push_back(w);
    for (std::size_t i = 0; i < clique.size(); ++i) {
      Vertex w = clique[i];
      if (i > 0 && !rng.chance(density)) continue;
      mat[v][w] = mat[w][v] = true;
      adj[v].push_back(w);
      adj[w].push_back(v);
      edges.emplace_back(w, v);
    }
  }
  return Graph(n, edges);
}

namespace detail {

// Hub clique, sub-hubs under each hub, and small twin cliques under each
// sub-hub. Twin cliques keep one irredundant vertex each, every other vertex
// is redundant, and the longest induced path has 6 vertices (4 when
// `levels` is 2). Degrees grow like the cube root of n.
inline Graph layered_pk_free(Vertex n, int levels, SplitMix64& rng) {
  constexpr Vertex kTwins = 2;
  const double base = std::cbrt(static_cast<double>(n) / kTwins);
  const Vertex hubs = std::max<Vertex>(1, static_cast<Vertex>(levels == 2 ? std::sqrt(n / 3.0) : base));
  const Vertex subs = levels == 2 ? 0 : std::max<Vertex>(1, static_cast<Vertex>(base));
  std::vector<Edge> edges;
  Vertex next = 0;
  std::vector<Vertex> hub_ids, anchors;
  for (Vertex i = 0; i < hubs && next < n; ++i) hub_ids.push_back(next++);
  for (std::size_t i = 0; i < hub_ids.size(); ++i)
    for (std::size_t j = i + 1; j < hub_ids.size(); ++j) edges.emplace_back(hub_ids[i], hub_ids[j]);
  if (levels == 2) {
    anchors = hub_ids;
  } else {
    for (Vertex h : hub_ids)
      for (Vertex j = 0; j < subs && next < n; ++j) {
        edges.emplace_back(h, next);
        anchors.push_back(next++);
      }
  }
  std::size_t turn = static_cast<std::size_t>(rng.below(anchors.size()));
  while (next < n) {
    Vertex anchor = anchors[turn++ % anchors.size()];
    Vertex size = std::min<Vertex>(kTwins, n - next);
    for (Vertex a = next; a < next + size; ++a) {
      edges.emplace_back(anchor, a);
      for (Vertex b = a + 1; b < next + size; ++b) edges.emplace_back(a, b);
    }
    next += size;
  }
  return Graph(n, edges);
}

// Induced paths checked exactly on random connected pieces of up to 40 vertices.
inline void spot_check_pk_free(const Graph& g, int k, SplitMix64& rng, int samples) {
  for (int s = 0; s < samples; ++s) {
    auto start = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(g.n())));
    std::vector<Vertex> piece{start}, frontier{start};
    std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
    seen[start] = 1;
    while (!frontier.empty() && piece.size() < 40) {
      std::size_t i = rng.below(frontier.size());
      Vertex v = frontier[i];
      frontier.erase(frontier.begin() + static_cast<std::ptrdiff_t>(i));
      for (Vertex w : g.neighbors(v))
        if (!seen[w] && piece.size() < 40) {
          seen[w] = 1;
          piece.push_back(w);
          frontier.push_back(w);
        }
    }
    auto sub = induced_subgraph(g, VertexSet(std::move(piece)));
    auto r = is_pk_free(sub.graph, k);
    if (!r) throw std::logic_error("generated graph contains an induced P" + std::to_string(k));
  }
}

}  // namespace detail

inline constexpr Vertex kRejectionMaxVertices = 40;
inline constexpr int kRejectionAttempts = 200000;

// Connected chordal P_k-free graph. Up to 40 vertices: rejection sampling of
// gen_chordal through the exact recognizer. Above: the layered construction,
// verified chordal and spot-checked for induced paths.
inline Graph gen_pk_free_chordal(Vertex n, int k, std::uint64_t seed) {
  if (k < 6 || k > 9) throw std::invalid_argument("k must be in 6..9");
  if (n < 1) throw std::invalid_argument("n must be positive");
  SplitMix64 rng(seed);
  if (n <= kRejectionMaxVertices) {
    for (int attempt = 0; attempt < kRejectionAttempts; ++attempt) {
      SplitMix64 r = rng.split(static_cast<std::uint64_t>(attempt));
      double density = 0.25 + 0.75 * r.uniform();
      Graph g = gen_chordal(n, density, r.next());
      if (is_pk_free(g, k)) return g;
    }
    throw BudgetExceeded("rejection sampling found no P" + std::to_string(k) + "-free chordal graph on " +
                         std::to_string(n) + " vertices");
  }
  Graph g = detail::layered_pk_free(n, k == 6 ? 2 : 3, rng);
  if (!is_chordal(g)) throw std::logic_error("layered construction is not chordal");
  detail::spot_check_pk_free(g, k, rng, 8);
  return g;
}

// Random rooted tree on k vertices: parent[v] uniform among earlier vertices
// after a random relabelling.
inline TreePoset gen_tree_poset(Vertex k, std::uint64_t seed) {
  if (k < 1) throw std::invalid_argument("tree needs a vertex");
  SplitMix64 rng(seed);
  std::vector<Vertex> label(static_cast<std::size_t>(k));
  for (Vertex v = 0; v < k; ++v) label[v] = v;
  rng.shuffle(label);
  std::vector<Vertex> parent(static_cast<std::size_t>(k), kNoVertex);
  for (Vertex i = 1; i < k; ++i) parent[label[i]] = label[rng.below(static_cast<std::uint64_t>(i))];
  return tree_poset_from_parents(std::move(parent));
}

// Random X_1..X_p, Y over a poset: each vertex lands in Z, Y or one of the
// X sets with the given probabilities.
inline ExtensionInstance gen_extension_instance(const TreePoset& t, int max_x_sets, double p_z, double p_y,
                                                SplitMix64& rng) {
  const int p = max_x_sets <= 0 ? 0 : static_cast<int>(rng.below(static_cast<std::uint64_t>(max_x_sets) + 1));
  std::vector<std::vector<Vertex>> xs(static_cast<std::size_t>(p));
  std::vector<Vertex> y;
  for (Vertex v = 0; v < t.size(); ++v) {
    double r = rng.uniform();
    if (r < p_z) continue;
    if (r < p_z + p_y || p == 0) y.push_back(v);
    else xs[rng.below(static_cast<std::uint64_t>(p))].push_back(v);
  }
  ExtensionInstance inst{std::cref(t), {}, VertexSet::from_sorted(std::move(y))};
  for (auto& x : xs)
    if (!x.empty()) inst.x_sets.push_back(VertexSet::from_sorted(std::move(x)));
  return inst;
}

// All connected labelled graphs on 1..n_max vertices (isomorphic copies
// included), by increasing n and then by edge mask.
class ExhaustiveCorpus {
public:
  explicit ExhaustiveCorpus(Vertex n_max) : n_max_(n_max) {
    if (n_max > 7) throw SizeLimitError("exhaustive corpus limited to 7 vertices");
    start(1);
  }

  std::optional<Graph> next() {
    while (n_ <= n_max_) {
      while (mask_ < (std::uint64_t{1} << pairs_.size())) {
        std::uint64_t m = mask_++;
        if (connected(m)) return build(m);
      }
      start(n_ + 1);
    }
    return std::nullopt;
  }

private:
  void start(Vertex n) {
    n_ = n;
    mask_ = 0;
    pairs_.clear();
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) pairs_.emplace_back(u, v);
  }

  bool connected(std::uint64_t m) const {
    std::uint32_t adj[8] = {};
    for (std::size_t i = 0; i < pairs_.size(); ++i)
      if ((m >> i) & 1U) {
        adj[pairs_[i].first] |= 1U << pairs_[i].second;
        adj[pairs_[i].second] |= 1U << pairs_[i].first;
      }
    std::uint32_t seen = 1, grow = 1;
    while (grow) {
      std::uint32_t nb = 0;
      for (std::uint32_t r = grow; r; r &= r - 1) nb |= adj[__builtin_ctz(r)];
      grow = nb & ~seen;
      seen |= nb;
    }
    return seen == (1U << n_) - 1;
  }

  Graph build(std::uint64_t m) const {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs_.size(); ++i)
      if ((m >> i) & 1U) edges.push_back(pairs_[i]);
    return Graph(n_, edges);
  }

  Vertex n_max_;
  Vertex n_ = 0;
  std::uint64_t mask_ = 0;
  std::vector<Edge> pairs_;
};

inline ExhaustiveCorpus exhaustive_corpus(Vertex n_max) { return ExhaustiveCorpus(n_max); }

}  // namespace domenum
