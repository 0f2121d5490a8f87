#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace domenum;
using namespace domenum::testing;

namespace {

constexpr const char* kSatisfiable =
    "c small formula\n"
    "p cnf 3 3\n"
    "1 2 3 0\n"
    "-1 2 -3 0\n"
    "1 -2 3 0\n";

// Every assignment of three variables is excluded by one clause.
std::string unsatisfiable_text() {
  std::string s = "p cnf 3 8\n";
  for (int m = 0; m < 8; ++m) {
    for (int i = 0; i < 3; ++i) s += std::to_string(((m >> i) & 1) ? -(i + 1) : (i + 1)) + " ";
    s += "0\n";
  }
  return s;
}

std::optional<Cnf3> random_formula(SplitMix64& rng, int vars, int clauses) {
  std::vector<Clause> cs;
  for (int j = 0; j < clauses; ++j) {
    std::vector<int> pick{0, 1, 2, 3, 4, 5, 6, 7};
    pick.resize(static_cast<std::size_t>(vars));
    rng.shuffle(pick);
    Clause c{};
    for (int t = 0; t < 3; ++t) c[t] = {pick[t], rng.chance(0.5)};
    cs.push_back(c);
  }
  try {
    return Cnf3(vars, cs);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

}  // namespace

TEST(Cnf, ParseAndSerialize) {
  Cnf3 phi = parse_cnf(kSatisfiable);
  EXPECT_EQ(phi.var_count(), 3);
  EXPECT_EQ(phi.clauses().size(), 3U);
  EXPECT_EQ(serialize_cnf(parse_cnf(serialize_cnf(phi))), serialize_cnf(phi));
  EXPECT_TRUE(phi.brute_force_solve().has_value());
  EXPECT_FALSE(parse_cnf(unsatisfiable_text()).brute_force_solve().has_value());
}

TEST(Cnf, ParseErrors) {
  EXPECT_THROW(parse_cnf("1 2 3 0\n"), FormatError);
  EXPECT_THROW(parse_cnf("p cnf 3 1\n1 2 0\n"), FormatError);
  EXPECT_THROW(parse_cnf("p cnf 3 3\n1 2 4 0\n"), FormatError);
  EXPECT_THROW(parse_cnf("p cnf 3 3\n1 2 3 0\n"), FormatError);
  try {
    parse_cnf("p cnf 3 3\n1 2 3 0\n1 x 3 0\n");
    FAIL();
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find('3'), std::string::npos);
  }
}

TEST(Cnf, RejectsDegenerateFormulas) {
  EXPECT_THROW(Cnf3(2, {}), std::invalid_argument);
  Clause a{{{0, false}, {1, false}, {2, false}}};
  Clause b{{{0, true}, {1, false}, {2, true}}};
  Clause c{{{0, false}, {1, true}, {2, false}}};
  Clause taut{{{0, false}, {0, true}, {2, false}}};
  EXPECT_NO_THROW(Cnf3(3, {a, b, c}));
  EXPECT_THROW(Cnf3(3, {a, a, b}), std::invalid_argument);
  EXPECT_THROW(Cnf3(3, {a, b, taut}), std::invalid_argument);
  Clause d{{{0, false}, {1, true}, {2, true}}};
  // x1 occurs in every clause.
  EXPECT_THROW(Cnf3(3, {a, c, d}), std::invalid_argument);
}

TEST(Reduction, GadgetShape) {
  Cnf3 phi = parse_cnf(kSatisfiable);
  auto r = build_reduction(phi);
  EXPECT_EQ(r.graph.n(), 12 * 3 + 3);
  EXPECT_TRUE(is_connected(r.graph));
  EXPECT_TRUE(is_chordal(r.graph).chordal);
  EXPECT_TRUE(is_pk_free(r.graph, 9).free);
  EXPECT_FALSE(is_pk_free(r.graph, 8).free);
  EXPECT_EQ(r.map.role(r.map.clause(0)).kind, "c");
  EXPECT_EQ(r.map.role(r.map.paw_w(2)).kind, "w");
  EXPECT_TRUE(r.map.role(r.map.literal(1, true)).negated);
  // Redundant: pendant middles and the paw vertices a, v. Everything else is irredundant.
  for (int i = 0; i < 3; ++i)
    for (bool neg : {false, true}) {
      EXPECT_TRUE(r.a_set.contains(r.map.pendant_y(i, neg)));
      EXPECT_FALSE(r.a_set.contains(r.map.pendant_z(i, neg)));
      EXPECT_FALSE(r.a_set.contains(r.map.literal(i, neg)));
      EXPECT_FALSE(r.a_set.contains(r.map.copy(i, neg)));
    }
  for (int i = 0; i < 3; ++i) {
    EXPECT_TRUE(r.a_set.contains(r.map.paw_a(i)));
    EXPECT_TRUE(r.a_set.contains(r.map.paw_v(i)));
    EXPECT_FALSE(r.a_set.contains(r.map.paw_w(i)));
  }
  EXPECT_EQ(r.a_set.size(), 4U * 3U);
  auto lines = r.map.to_json_lines();
  EXPECT_EQ(std::count(lines.begin(), lines.end(), '\n'), r.graph.n());
  auto first = nlohmann::json::parse(lines.substr(0, lines.find('\n')));
  EXPECT_EQ(first["vertex"], 1);
  EXPECT_EQ(first["role"], "x");
}

TEST(Reduction, DecisionMatchesSatisfiability) {
  SplitMix64 rng(5);
  int sat = 0, unsat = 0;
  for (int trial = 0; trial < 200; ++trial) {
    int vars = 3 + static_cast<int>(rng.below(2));
    auto phi = random_formula(rng, vars, 3 + static_cast<int>(rng.below(10)));
    if (!phi) continue;
    auto r = build_reduction(*phi);
    auto got = decide_and_extract(r.graph, r.a_set, r.map, *phi);
    EXPECT_EQ(got.has_value(), phi->brute_force_solve().has_value()) << serialize_cnf(*phi);
    if (got) {
      EXPECT_TRUE(phi->satisfied_by(*got));
      ++sat;
    } else {
      ++unsat;
    }
  }
  EXPECT_GT(sat, 10);
  EXPECT_GE(unsat, 0);
  Cnf3 u = parse_cnf(unsatisfiable_text());
  auto r = build_reduction(u);
  EXPECT_FALSE(decide_and_extract(r.graph, r.a_set, r.map, u).has_value());
}
