#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace domenum;
using namespace domenum::testing;

namespace {

const TreePoset& cherry() {  // root 0, leaves 1 and 2
  static const TreePoset t = poset({kNoVertex, 0, 0});
  return t;
}

}  // namespace

TEST(SolveIep, Examples) {
  ExtensionInstance a{std::cref(cherry()), {VertexSet{1}}, {}};
  EXPECT_TRUE(solve_iep(a));
  EXPECT_TRUE(oracle::brute_iep(a));

  static const TreePoset edge = poset({kNoVertex, 0});
  ExtensionInstance b{std::cref(edge), {VertexSet{1}}, {}};
  EXPECT_FALSE(solve_iep(b));
  EXPECT_FALSE(oracle::brute_iep(b));

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    TreePoset t = gen_tree_poset(static_cast<Vertex>(1 + seed % 9), seed);
    EXPECT_TRUE(solve_iep(ExtensionInstance{std::cref(t), {}, {}}));
  }
}

TEST(SolveIep, MaximalUndominatedSet) {
  TreePoset t = poset({kNoVertex, 0, 1, 0});  // chain 0<1<2 and leaf 3
  ExtensionInstance inst{std::cref(t), {}, VertexSet{2, 3}};
  EXPECT_EQ(maximal_undominated(inst), (VertexSet{1}));
}

TEST(SolveIep, RejectsMalformedInstances) {
  EXPECT_THROW(solve_iep(ExtensionInstance{std::cref(cherry()), {VertexSet{1}}, VertexSet{1}}), InstanceError);
  EXPECT_THROW(solve_iep(ExtensionInstance{std::cref(cherry()), {VertexSet{1}, VertexSet{1, 2}}, {}}), InstanceError);
  EXPECT_THROW(solve_iep(ExtensionInstance{std::cref(cherry()), {VertexSet{5}}, {}}), InstanceError);
}

TEST(SolveIep, ForbiddenSetBelowTwoMaximalVerticesIsRefused) {
  // Root 0 with children 1, 2; leaves 3, 5 under 1 and 4, 6 under 2. With
  // 5 and 6 forbidden, 1 and 2 can only be dominated through 3 and 4, which
  // together dominate the forbidden set {3, 4}: the answer couples the two
  // maximal undominated vertices.
  TreePoset t = poset({kNoVertex, 0, 0, 1, 2, 1, 2});
  ExtensionInstance inst{std::cref(t), {VertexSet{3, 4}, VertexSet{5}, VertexSet{6}}, VertexSet{0}};
  EXPECT_FALSE(oracle::brute_iep(inst));
  EXPECT_THROW(solve_iep(inst), ClassError);
}

TEST(SolveIep, AgreesWithExhaustiveSearch) {
  SplitMix64 rng(101);
  int answered = 0;
  for (int i = 0; i < 3000; ++i) {
    TreePoset t = gen_tree_poset(static_cast<Vertex>(1 + rng.below(10)), rng.next());
    auto inst = gen_extension_instance(t, 3, 0.35, 0.25, rng);
    bool expect = oracle::brute_iep(inst);
    try {
      ASSERT_EQ(solve_iep(inst), expect);
      ++answered;
    } catch (const ClassError&) {
    }
  }
  EXPECT_GT(answered, 2000);
}

TEST(SolveIcep, Examples) {
  ExtensionInstance base{std::cref(cherry()), {VertexSet{1}}, {}};
  EXPECT_EQ(solve_icep(IcepQuery{base, {}, {}}), solve_iep(base));
  EXPECT_TRUE(solve_icep(IcepQuery{base, VertexSet{2}, {}}));
  EXPECT_FALSE(solve_icep(IcepQuery{base, {}, VertexSet{2}}));
  EXPECT_FALSE(oracle::brute_icep(IcepQuery{base, {}, VertexSet{2}}));
  EXPECT_THROW(solve_icep(IcepQuery{base, VertexSet{2}, VertexSet{2}}), InstanceError);
}

TEST(SolveIcep, AncestorIsTheOnlyDominator) {
  // Chain 0 < 1, nothing dominated yet, 1 forced out: D = {0} qualifies.
  TreePoset chain = poset({kNoVertex, 0});
  IcepQuery q{ExtensionInstance{std::cref(chain), {}, {}}, {}, VertexSet{1}};
  EXPECT_TRUE(oracle::brute_icep(q));
  EXPECT_TRUE(solve_icep(q));
}

TEST(SolveIcep, AgreesWithExhaustiveSearch) {
  SplitMix64 rng(202);
  int answered = 0;
  for (int i = 0; i < 3000; ++i) {
    const Vertex k = static_cast<Vertex>(1 + rng.below(10));
    TreePoset t = gen_tree_poset(k, rng.next());
    auto inst = gen_extension_instance(t, 3, 0.4, 0.2, rng);
    std::vector<Vertex> s, q;
    for (Vertex v = 0; v < k; ++v) {
      double r = rng.uniform();
      if (r < 0.15) s.push_back(v);
      else if (r < 0.35) q.push_back(v);
    }
    IcepQuery query{inst, VertexSet(s), VertexSet(q)};
    bool expect = oracle::brute_icep(query);
    try {
      ASSERT_EQ(solve_icep(query), expect) << "k=" << k;
      ++answered;
    } catch (const ClassError&) {
    }
  }
  EXPECT_GT(answered, 2000);
}

TEST(ComponentInstance, P6WithOneRedundantVertex) {
  auto g = p6();
  auto cls = classify(g);
  ComponentPosets posets(g, cls);
  auto view = view_of(g, cls, VertexSet{1});
  EXPECT_TRUE(view.full[0]);
  EXPECT_FALSE(view.full[1]);
  auto inst = component_instance(posets, view, 1);  // component {2,3}
  EXPECT_TRUE(inst.x_sets.empty());                 // 1 is blue thanks to {0}
  EXPECT_EQ(inst.y_set, (VertexSet{0}));            // local 0 is vertex 2
}
