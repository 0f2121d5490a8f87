#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "domenum/errors.hpp"
#include "domenum/graph.hpp"
#include "domenum/graph_io.hpp"
#include "domenum/oracle.hpp"
#include "domenum/redundancy.hpp"

namespace domenum {

// Literal: variable index (0-based) and polarity.
struct Literal {
  int var = 0;
  bool negated = false;

  friend auto operator<=>(const Literal&, const Literal&) = default;
};

using Clause = std::array<Literal, 3>;

// 3-CNF formula with the non-degeneracy conditions of the gadget: at least
// three variables and clauses, no complementary pair inside a clause,
// pairwise distinct clauses, and no literal present in every clause.
class Cnf3 {
public:
  Cnf3(int var_count, std::vector<Clause> clauses) : var_count_(var_count), clauses_(std::move(clauses)) {
    if (var_count_ < 3) throw std::invalid_argument("degenerate formula: fewer than three variables");
    if (clauses_.size() < 3) throw std::invalid_argument("degenerate formula: fewer than three clauses");
    std::set<std::array<Literal, 3>> seen;
    std::map<Literal, std::size_t> occurrences;
    for (auto& c : clauses_) {
      for (const auto& l : c)
        if (l.var < 0 || l.var >= var_count_) throw std::invalid_argument("literal variable out of range");
      std::sort(c.begin(), c.end());
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
          if (c[i].var == c[j].var && c[i].negated != c[j].negated)
            throw std::invalid_argument("degenerate formula: clause contains a literal and its negation");
          if (c[i] == c[j]) throw std::invalid_argument("clause repeats a literal");
        }
      if (!seen.insert(c).second) throw std::invalid_argument("degenerate formula: two clauses are equal");
      for (const auto& l : c) ++occurrences[l];
    }
    for (const auto& [lit, k] : occurrences)
      if (k == clauses_.size()) throw std::invalid_argument("degenerate formula: a literal occurs in every clause");
  }

  int var_count() const { return var_count_; }
  const std::vector<Clause>& clauses() const { return clauses_; }

  bool satisfied_by(const std::vector<bool>& assignment) const {
    return std::all_of(clauses_.begin(), clauses_.end(), [&](const Clause& c) {
      return std::any_of(c.begin(), c.end(), [&](const Literal& l) { return assignment[l.var] != l.negated; });
    });
  }

  // Exhaustive search over all assignments.
  std::optional<std::vector<bool>> brute_force_solve() const {
    if (var_count_ > 24) throw SizeLimitError("brute-force satisfiability limited to 24 variables");
    std::vector<bool> a(static_cast<std::size_t>(var_count_));
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << var_count_); ++m) {
      for (int i = 0; i < var_count_; ++i) a[i] = (m >> i) & 1U;
      if (satisfied_by(a)) return a;
    }
    return std::nullopt;
  }

private:
  int var_count_;
  std::vector<Clause> clauses_;
};

// DIMACS CNF: "p cnf <vars> <clauses>", then clauses of three nonzero
// literals terminated by 0. Comment lines start with "c".
inline Cnf3 parse_cnf(std::string_view text) {
  detail::LineReader reader{text};
  std::optional<long long> vars, count;
  std::vector<Clause> clauses;
  std::vector<Literal> pending;
  std::size_t last = 0;
  while (auto line = reader.next()) {
    auto tok = detail::split_ws(*line);
    if (tok.empty() || tok[0] == "c" || tok[0] == "%") continue;
    std::size_t ln = reader.line_no;
    last = ln;
    if (tok[0] == "p") {
      if (vars) throw FormatError(ln, "second problem line");
      if (tok.size() != 4 || tok[1] != "cnf") throw FormatError(ln, "malformed header, expected 'p cnf <n> <m>'");
      vars = detail::to_int(tok[2], ln);
      count = detail::to_int(tok[3], ln);
      if (*vars < 0 || *count < 0) throw FormatError(ln, "malformed header, negative count");
      continue;
    }
    if (!vars) throw FormatError(ln, "clause before 'p cnf' header");
    for (auto t : tok) {
      long long v = detail::to_int(t, ln);
      if (v == 0) {
        if (pending.size() != 3) throw FormatError(ln, "clause with " + std::to_string(pending.size()) + " literals, expected 3");
        clauses.push_back({pending[0], pending[1], pending[2]});
        pending.clear();
        continue;
      }
      if (std::llabs(v) > *vars) throw FormatError(ln, "variable out of range");
      pending.push_back({static_cast<int>(std::llabs(v) - 1), v < 0});
    }
  }
  if (!vars) throw FormatError(0, "missing 'p cnf' header");
  if (!pending.empty()) throw FormatError(last, "unterminated clause");
  if (static_cast<long long>(clauses.size()) != *count)
    throw FormatError(0, "header declares " + std::to_string(*count) + " clauses but " + std::to_string(clauses.size()) +
                             " were given");
  try {
    return Cnf3(static_cast<int>(*vars), std::move(clauses));
  } catch (const std::invalid_argument& e) {
    throw FormatError(0, e.what());
  }
}

inline std::string serialize_cnf(const Cnf3& phi) {
  std::ostringstream out;
  out << "p cnf " << phi.var_count() << ' ' << phi.clauses().size() << '\n';
  for (const auto& c : phi.clauses()) {
    for (const auto& l : c) out << (l.negated ? -(l.var + 1) : l.var + 1) << ' ';
    out << "0\n";
  }
  return out.str();
}

// Vertex roles of the gadget. Numbering: x_i and its negation (2i, 2i+1),
// then u_i and its negation, then c_j, then per variable the pendant pair
// (y_i, -y_i, z_i, -z_i), then per variable the paw (a_i, b_i, v_i, w_i).
struct GadgetMap {
  int n_vars = 0;
  int n_clauses = 0;

  Vertex literal(int i, bool neg) const { return 2 * i + (neg ? 1 : 0); }
  Vertex copy(int i, bool neg) const { return 2 * n_vars + 2 * i + (neg ? 1 : 0); }
  Vertex clause(int j) const { return 4 * n_vars + j; }
  Vertex pendant_y(int i, bool neg) const { return 4 * n_vars + n_clauses + 4 * i + (neg ? 1 : 0); }
  Vertex pendant_z(int i, bool neg) const { return 4 * n_vars + n_clauses + 4 * i + 2 + (neg ? 1 : 0); }
  Vertex paw_a(int i) const { return 8 * n_vars + n_clauses + 4 * i; }
  Vertex paw_b(int i) const { return paw_a(i) + 1; }
  Vertex paw_v(int i) const { return paw_a(i) + 2; }
  Vertex paw_w(int i) const { return paw_a(i) + 3; }
  Vertex vertex_count() const { return 12 * n_vars + n_clauses; }

  struct Role {
    std::string kind;  // x, u, c, y, z, a, b, v, w
    int index = 0;     // variable or clause index
    bool negated = false;
  };

  Role role(Vertex v) const {
    if (v < 0 || v >= vertex_count()) throw std::out_of_range("vertex outside the gadget");
    if (v < 2 * n_vars) return {"x", v / 2, (v % 2) == 1};
    if (v < 4 * n_vars) return {"u", (v - 2 * n_vars) / 2, (v % 2) == 1};
    if (v < 4 * n_vars + n_clauses) return {"c", v - 4 * n_vars, false};
    if (v < 8 * n_vars + n_clauses) {
      int r = v - 4 * n_vars - n_clauses;
      return {(r % 4) < 2 ? "y" : "z", r / 4, (r % 2) == 1};
    }
    int r = v - 8 * n_vars - n_clauses;
    static constexpr const char* kPaw[] = {"a", "b", "v", "w"};
    return {kPaw[r % 4], r / 4, false};
  }

  // One JSON object per line: {"vertex": <1-indexed>, "role": ..., "index": <1-indexed>, "negated": ...}.
  std::string to_json_lines() const {
    std::ostringstream out;
    for (Vertex v = 0; v < vertex_count(); ++v) {
      Role r = role(v);
      nlohmann::json j{{"vertex", v + 1}, {"role", r.kind}, {"index", r.index + 1}, {"negated", r.negated}};
      out << j.dump() << '\n';
    }
    return out.str();
  }
};

struct Reduction {
  Graph graph;
  VertexSet a_set;  // RN(G)
  GadgetMap map;
};

// Split core on literals, literal copies and clauses, with pendant paths on
// the literals and a paw hanging from each pair of copies. Setting A = RN(G),
// A is the redundant part of a minimal dominating set iff phi is satisfiable.
inline Reduction build_reduction(const Cnf3& phi) {
  GadgetMap map{phi.var_count(), static_cast<int>(phi.clauses().size())};
  std::vector<Edge> edges;
  auto add = [&](Vertex u, Vertex v) { edges.emplace_back(std::min(u, v), std::max(u, v)); };
  std::vector<Vertex> clique;
  for (int i = 0; i < map.n_vars; ++i) {
    clique.push_back(map.copy(i, false));
    clique.push_back(map.copy(i, true));
  }
  for (int j = 0; j < map.n_clauses; ++j) clique.push_back(map.clause(j));
  for (std::size_t p = 0; p < clique.size(); ++p)
    for (std::size_t q = p + 1; q < clique.size(); ++q) add(clique[p], clique[q]);
  for (int i = 0; i < map.n_vars; ++i)
    for (bool neg : {false, true}) {
      add(map.copy(i, neg), map.literal(i, neg));
      add(map.literal(i, neg), map.pendant_y(i, neg));
      add(map.pendant_y(i, neg), map.pendant_z(i, neg));
    }
  for (int j = 0; j < map.n_clauses; ++j)
    for (const auto& l : phi.clauses()[j]) add(map.literal(l.var, l.negated), map.clause(j));
  for (int i = 0; i < map.n_vars; ++i) {
    add(map.paw_a(i), map.paw_v(i));
    add(map.paw_a(i), map.paw_w(i));
    add(map.paw_v(i), map.paw_w(i));
    add(map.paw_a(i), map.paw_b(i));
    add(map.paw_v(i), map.copy(i, false));
    add(map.paw_v(i), map.copy(i, true));
  }
  Graph g(map.vertex_count(), edges);
  VertexSet rn = classify(g).rn;
  return {std::move(g), std::move(rn), map};
}

// Searches for an irredundant extension of A and reads the assignment off its
// literal vertices (variables whose literals are both absent default to false).
// The result is checked against the formula.
inline std::optional<std::vector<bool>> decide_and_extract(const Graph& g, const VertexSet& a_set, const GadgetMap& map,
                                                           const Cnf3& phi) {
  if (map.n_vars > 8) throw SizeLimitError("extension search on the gadget limited to 8 variables");
  auto cls = classify(g);
  auto ext = oracle::find_irredundant_extension(g, cls, a_set);
  if (!ext) return std::nullopt;
  std::vector<bool> assignment(static_cast<std::size_t>(map.n_vars), false);
  for (int i = 0; i < map.n_vars; ++i) {
    bool pos = ext->contains(map.literal(i, false)), neg = ext->contains(map.literal(i, true));
    if (pos && neg) throw std::logic_error("extension contains a literal and its negation");
    assignment[i] = pos;
  }
  if (!phi.satisfied_by(assignment)) throw std::logic_error("extracted assignment does not satisfy the formula");
  return assignment;
}

}  // namespace domenum
