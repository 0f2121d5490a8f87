#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace domenum;
using namespace domenum::testing;

namespace {

bool induces_cycle(const Graph& g, const std::vector<Vertex>& c) {
  const std::size_t k = c.size();
  if (k < 4 || VertexSet(c).size() != k) return false;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
      if (g.adjacent(c[i], c[j]) != consecutive) return false;
    }
  return true;
}

bool induces_path(const Graph& g, const std::vector<Vertex>& p) {
  if (VertexSet(p).size() != p.size()) return false;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (g.adjacent(p[i], p[j]) != (j == i + 1)) return false;
  return true;
}

// Subset scan: some vertex set of size >= 4 induces a connected 2-regular graph.
bool brute_has_hole(const Graph& g) {
  const Vertex n = g.n();
  for (std::uint32_t m = 0; m < (1U << n); ++m) {
    if (__builtin_popcount(m) < 4) continue;
    std::vector<Vertex> s;
    for (Vertex v = 0; v < n; ++v)
      if (m >> v & 1U) s.push_back(v);
    bool two_regular = true;
    for (Vertex v : s) {
      int d = 0;
      for (Vertex w : s) d += g.adjacent(v, w);
      two_regular = two_regular && d == 2;
    }
    if (two_regular && connected_components(g, VertexSet(s)).size() == 1) return true;
  }
  return false;
}

// Subset scan: some k vertices induce a path.
bool brute_has_path(const Graph& g, int k) {
  const Vertex n = g.n();
  for (std::uint32_t m = 0; m < (1U << n); ++m) {
    if (__builtin_popcount(m) != k) continue;
    std::vector<Vertex> s;
    for (Vertex v = 0; v < n; ++v)
      if (m >> v & 1U) s.push_back(v);
    int ones = 0;
    bool ok = true;
    std::size_t edges = 0;
    for (Vertex v : s) {
      int d = 0;
      for (Vertex w : s) d += g.adjacent(v, w);
      edges += static_cast<std::size_t>(d);
      ones += d <= 1;
      ok = ok && d <= 2;
    }
    if (ok && edges / 2 == s.size() - 1 && connected_components(g, VertexSet(s)).size() == 1 && (k == 1 || ones == 2))
      return true;
  }
  return false;
}

Graph random_graph(Vertex n, double p, SplitMix64& rng) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.chance(p)) e.emplace_back(u, v);
  return Graph(n, e);
}

}  // namespace

TEST(IsChordal, C4HasHoleWitness) {
  auto r = is_chordal(cycle(4));
  EXPECT_FALSE(r.chordal);
  EXPECT_EQ(VertexSet(r.hole), (VertexSet{0, 1, 2, 3}));
  EXPECT_TRUE(induces_cycle(cycle(4), r.hole));
}

TEST(IsChordal, PathsAreChordal) { EXPECT_TRUE(is_chordal(p6()).chordal); }

TEST(IsChordal, GadgetIsChordal) {
  Cnf3 phi(3, {Clause{Literal{0, false}, {1, false}, {2, false}}, Clause{Literal{0, true}, {1, false}, {2, true}},
               Clause{Literal{0, false}, {1, true}, {2, false}}});
  EXPECT_TRUE(is_chordal(build_reduction(phi).graph).chordal);
}

TEST(IsChordal, AgreesWithSubsetScan) {
  SplitMix64 rng(11);
  for (int i = 0; i < 400; ++i) {
    Vertex n = static_cast<Vertex>(1 + rng.below(8));
    Graph g = random_graph(n, 0.2 + 0.6 * rng.uniform(), rng);
    auto r = is_chordal(g);
    ASSERT_EQ(r.chordal, !brute_has_hole(g)) << serialize_graph(g);
    if (!r.chordal) {
      EXPECT_TRUE(induces_cycle(g, r.hole)) << serialize_graph(g);
    }
  }
}

TEST(IsPkFree, PathExamples) {
  EXPECT_TRUE(is_pk_free(p6(), 7).free);
  auto r = is_pk_free(p6(), 6);
  EXPECT_FALSE(r.free);
  EXPECT_TRUE(induces_path(p6(), r.path));
  EXPECT_EQ(r.path.size(), 6u);
}

TEST(IsPkFree, GadgetHasP8NotP9) {
  Cnf3 phi(3, {Clause{Literal{0, false}, {1, false}, {2, false}}, Clause{Literal{0, true}, {1, false}, {2, true}},
               Clause{Literal{0, false}, {1, true}, {2, false}}});
  auto red = build_reduction(phi);
  EXPECT_TRUE(is_pk_free(red.graph, 9).free);
  auto r = is_pk_free(red.graph, 8);
  ASSERT_FALSE(r.free);
  ASSERT_TRUE(induces_path(red.graph, r.path));
  std::string shape;
  for (Vertex v : r.path) shape += red.map.role(v).kind;
  // Induced P8s of the gadget cross the clique core.
  EXPECT_NE(shape.find_first_of("uc"), std::string::npos) << shape;
}

TEST(IsPkFree, AgreesWithSubsetScan) {
  SplitMix64 rng(12);
  for (int i = 0; i < 300; ++i) {
    Vertex n = static_cast<Vertex>(1 + rng.below(8));
    Graph g = random_graph(n, 0.15 + 0.5 * rng.uniform(), rng);
    for (int k = 2; k <= 8; ++k) {
      auto r = is_pk_free(g, k);
      ASSERT_EQ(r.free, !brute_has_path(g, k)) << "k=" << k << "\n" << serialize_graph(g);
      if (!r.free) {
        EXPECT_TRUE(induces_path(g, r.path));
      }
    }
  }
}

TEST(IsPkFree, BudgetIsEnforced) { EXPECT_THROW(is_pk_free(path(30), 30, 5), BudgetExceeded); }

TEST(BuildTreePoset, Examples) {
  auto k3 = build_tree_poset(complete(3));
  ASSERT_TRUE(k3);
  EXPECT_EQ(k3.poset->root, 0);
  EXPECT_EQ(k3.poset->parent, (std::vector<Vertex>{kNoVertex, 0, 1}));

  auto s3 = build_tree_poset(star3());
  ASSERT_TRUE(s3);
  EXPECT_EQ(s3.poset->root, 0);
  EXPECT_EQ(s3.poset->children[0], (std::vector<Vertex>{1, 2, 3}));

  auto p3 = build_tree_poset(path(3));
  ASSERT_TRUE(p3);
  EXPECT_EQ(p3.poset->root, 1);
  EXPECT_EQ(p3.poset->leaves, (std::vector<Vertex>{0, 2}));
  EXPECT_TRUE(closed_neighborhood(path(3), 0).is_subset_of(closed_neighborhood(path(3), 1)));
}

TEST(BuildTreePoset, RejectsP4AndC4WithWitness) {
  auto p4 = build_tree_poset(path(4));
  ASSERT_FALSE(p4);
  EXPECT_EQ(p4.failure->kind, NotTriviallyPerfect::Kind::kP4);
  EXPECT_TRUE(induces_path(path(4), p4.failure->witness));
  auto c4 = build_tree_poset(cycle(4));
  ASSERT_FALSE(c4);
  EXPECT_EQ(c4.failure->kind, NotTriviallyPerfect::Kind::kC4);
  EXPECT_TRUE(induces_cycle(cycle(4), c4.failure->witness));
  EXPECT_THROW(build_tree_poset(Graph(2, {})), std::invalid_argument);
}

TEST(BuildTreePoset, WitnessesOnRandomNonTriviallyPerfectGraphs) {
  SplitMix64 rng(5);
  int failures = 0;
  for (int i = 0; i < 300; ++i) {
    Graph g = gen_chordal(static_cast<Vertex>(4 + rng.below(8)), rng.uniform(), rng.next());
    auto r = build_tree_poset(g);
    if (r) continue;
    ++failures;
    const auto& w = r.failure->witness;
    if (r.failure->kind == NotTriviallyPerfect::Kind::kP4) EXPECT_TRUE(induces_path(g, w));
    else EXPECT_TRUE(induces_cycle(g, w));
  }
  EXPECT_GT(failures, 0);
}

TEST(BuildTreePoset, ComparabilityGraphRoundTrip) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    TreePoset t = gen_tree_poset(static_cast<Vertex>(1 + seed % 14), seed);
    Graph h = comparability_graph(t);
    auto r = build_tree_poset(h);
    ASSERT_TRUE(r);
    const TreePoset& u = *r.poset;
    EXPECT_EQ(comparability_graph(u).edges(), h.edges());
    EXPECT_EQ(static_cast<std::size_t>(h.degree(u.root)), static_cast<std::size_t>(h.n() - 1));
    for (Vertex v = 0; v < u.size(); ++v) {
      if (v == u.root) continue;
      EXPECT_TRUE(closed_neighborhood(h, v).is_subset_of(closed_neighborhood(h, u.parent[v])));
      for (Vertex x = 0; x < u.size(); ++x) {
        bool on_path = false;
        for (Vertex a = v; a != kNoVertex; a = u.parent[a]) on_path = on_path || a == x;
        EXPECT_EQ(u.is_ancestor_or_self(x, v), on_path);
      }
    }
  }
}

TEST(BuildTreePoset, SubtreeIsContiguousPreorderSlice) {
  TreePoset t = poset({kNoVertex, 0, 0, 1, 1, 2});
  auto sub = t.subtree(1);
  EXPECT_EQ(VertexSet(std::vector<Vertex>(sub.begin(), sub.end())), (VertexSet{1, 3, 4}));
  EXPECT_EQ(t.leaves, (std::vector<Vertex>{3, 4, 5}));
  EXPECT_EQ(t.depth[5], 2);
}
