#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "domenum/errors.hpp"
#include "domenum/extension.hpp"
#include "domenum/graph.hpp"
#include "domenum/redundancy.hpp"

// Exponential reference implementations. None of them calls the enumeration
// or extension-problem code they are used to check.
namespace domenum::oracle {

inline constexpr Vertex kMaxBruteVertices = 24;
inline constexpr Vertex kMaxBruteComponent = 20;

using Family = std::vector<VertexSet>;  // sorted, duplicate-free

namespace detail {

using Mask = std::uint32_t;

inline VertexSet to_set(Mask m) {
  std::vector<Vertex> out;
  for (Vertex v = 0; m; ++v, m >>= 1)
    if (m & 1U) out.push_back(v);
  return VertexSet::from_sorted(std::move(out));
}

inline Mask to_mask(const VertexSet& s) {
  Mask m = 0;
  for (Vertex v : s) m |= Mask{1} << v;
  return m;
}

// d dominates `target` and every member has a private neighbor among `target`.
inline bool minimal_cover(const std::vector<Mask>& closed, Mask d, Mask target) {
  Mask once = 0, twice = 0;
  for (Mask r = d; r; r &= r - 1) {
    Mask nb = closed[static_cast<std::size_t>(__builtin_ctz(r))];
    twice |= once & nb;
    once |= nb;
  }
  if ((once & target) != target) return false;
  Mask lone = once & ~twice & target;
  for (Mask r = d; r; r &= r - 1)
    if ((closed[static_cast<std::size_t>(__builtin_ctz(r))] & lone) == 0) return false;
  return true;
}

inline std::vector<Mask> closed_masks(const Graph& g) {
  std::vector<Mask> closed(static_cast<std::size_t>(g.n()));
  for (Vertex v = 0; v < g.n(); ++v) {
    closed[v] = Mask{1} << v;
    for (Vertex w : g.neighbors(v)) closed[v] |= Mask{1} << w;
  }
  return closed;
}

inline void check_size(Vertex n, Vertex limit, const char* what) {
  if (n > limit)
    throw SizeLimitError(std::string(what) + ": " + std::to_string(n) + " vertices exceed the limit of " +
                         std::to_string(limit));
}

}  // namespace detail

// Definition-level check: N[d] = V and every member has a private neighbor.
inline bool is_minimal_dominating_naive(const Graph& g, const VertexSet& d) {
  std::vector<int> count(static_cast<std::size_t>(g.n()), 0);
  for (Vertex x : d) {
    ++count[x];
    for (Vertex w : g.neighbors(x)) ++count[w];
  }
  for (Vertex v = 0; v < g.n(); ++v)
    if (count[v] == 0) return false;
  for (Vertex x : d) {
    bool priv = count[x] == 1;
    for (Vertex w : g.neighbors(x)) priv = priv || count[w] == 1;
    if (!priv) return false;
  }
  return true;
}

// All minimal dominating sets, by filtering every subset.
inline Family brute_dom(const Graph& g) {
  detail::check_size(g.n(), kMaxBruteVertices, "brute_dom");
  const auto closed = detail::closed_masks(g);
  const detail::Mask all = g.n() == 32 ? ~detail::Mask{0} : (detail::Mask{1} << g.n()) - 1;
  Family out;
  for (std::uint64_t d = 0; d <= all; ++d)
    if (detail::minimal_cover(closed, static_cast<detail::Mask>(d), all)) out.push_back(detail::to_set(static_cast<detail::Mask>(d)));
  std::sort(out.begin(), out.end());
  return out;
}

inline Family brute_drn(const Graph& g, const Classification& cls) {
  std::set<VertexSet> parts;
  for (const auto& d : brute_dom(g)) parts.insert(set_intersection(d, cls.rn));
  return {parts.begin(), parts.end()};
}

inline Family brute_dir(const Graph& g, const Classification& cls, const VertexSet& a_set) {
  Family out;
  for (const auto& d : brute_dom(g))
    if (set_intersection(d, cls.rn) == a_set) out.push_back(set_difference(d, a_set));
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

struct ComponentSets {
  std::vector<Mask> closed;  // comparability neighborhoods
  Mask z = 0;
  std::vector<Mask> x;
};

inline ComponentSets component_sets(const ExtensionInstance& inst) {
  const TreePoset& t = inst.tree();
  const Vertex k = t.size();
  check_size(k, kMaxBruteComponent, "brute-force extension search");
  ComponentSets cs;
  cs.closed.assign(static_cast<std::size_t>(k), 0);
  for (Vertex v = 0; v < k; ++v)
    for (Vertex u = v; u != kNoVertex; u = t.parent[u]) {
      cs.closed[v] |= Mask{1} << u;
      cs.closed[u] |= Mask{1} << v;
    }
  Mask taken = to_mask(inst.y_set);
  for (const auto& x : inst.x_sets) {
    cs.x.push_back(to_mask(x));
    if (taken & cs.x.back()) throw InstanceError("X_1..X_p, Y overlap");
    taken |= cs.x.back();
  }
  Mask all = (Mask{1} << k) - 1;
  if (k == 32) all = ~Mask{0};
  cs.z = all & ~taken;
  return cs;
}

inline Mask closed_union(const std::vector<Mask>& closed, Mask d) {
  Mask nb = 0;
  for (Mask r = d; r; r &= r - 1) nb |= closed[static_cast<std::size_t>(__builtin_ctz(r))];
  return nb;
}

}  // namespace detail

// Some D in C dominates Z and none of X_1..X_p.
inline bool brute_iep(const ExtensionInstance& inst) {
  auto cs = detail::component_sets(inst);
  const std::uint64_t limit = std::uint64_t{1} << inst.tree().size();
  for (std::uint64_t d = 0; d < limit; ++d) {
    detail::Mask nb = detail::closed_union(cs.closed, static_cast<detail::Mask>(d));
    if ((nb & cs.z) != cs.z) continue;
    bool ok = true;
    for (auto x : cs.x) ok = ok && (nb & x) != x;
    if (ok) return true;
  }
  return false;
}

// Some D in C with S in D, D disjoint from Q, dominating Z, dominating none of
// X_1..X_p, and with a private neighbor in Z for every member.
inline bool brute_icep(const IcepQuery& q) {
  auto cs = detail::component_sets(q.instance);
  const detail::Mask s = detail::to_mask(q.s_set), qm = detail::to_mask(q.q_set);
  if (s & qm) throw InstanceError("S and Q overlap");
  const std::uint64_t limit = std::uint64_t{1} << q.instance.tree().size();
  for (std::uint64_t dd = 0; dd < limit; ++dd) {
    auto d = static_cast<detail::Mask>(dd);
    if ((d & s) != s || (d & qm)) continue;
    if (!detail::minimal_cover(cs.closed, d, cs.z)) continue;
    detail::Mask nb = detail::closed_union(cs.closed, d);
    bool ok = true;
    for (auto x : cs.x) ok = ok && (nb & x) != x;
    if (ok) return true;
  }
  return false;
}

// All D in C as in brute_icep with S = Q = {}; local indices.
inline Family brute_dir_component(const ExtensionInstance& inst) {
  auto cs = detail::component_sets(inst);
  const std::uint64_t limit = std::uint64_t{1} << inst.tree().size();
  Family out;
  for (std::uint64_t dd = 0; dd < limit; ++dd) {
    auto d = static_cast<detail::Mask>(dd);
    if (!detail::minimal_cover(cs.closed, d, cs.z)) continue;
    detail::Mask nb = detail::closed_union(cs.closed, d);
    bool ok = true;
    for (auto x : cs.x) ok = ok && (nb & x) != x;
    if (ok) out.push_back(detail::to_set(d));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Backtracking search for I inside IR(G) with A u I a minimal dominating set.
// Branches on the smallest undominated vertex; a branch dies as soon as a
// member has no private neighbor left, since adding members never creates one.
// Suited to graphs of a few dozen vertices.
inline std::optional<VertexSet> find_irredundant_extension(const Graph& g, const Classification& cls,
                                                           const VertexSet& a_set) {
  const Vertex n = g.n();
  std::vector<int> count(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> members;
  auto add = [&](Vertex x, int delta) {
    count[x] += delta;
    for (Vertex w : g.neighbors(x)) count[w] += delta;
  };
  auto has_private = [&](Vertex x) {
    if (count[x] == 1) return true;
    for (Vertex w : g.neighbors(x))
      if (count[w] == 1) return true;
    return false;
  };
  for (Vertex a : a_set) {
    add(a, 1);
    members.push_back(a);
  }
  std::vector<char> in_d(static_cast<std::size_t>(n), 0);
  for (Vertex a : a_set) in_d[a] = 1;

  std::optional<VertexSet> found;
  auto rec = [&](auto&& self) -> bool {
    for (Vertex x : members)
      if (!has_private(x)) return false;
    Vertex u = kNoVertex;
    for (Vertex v = 0; v < n; ++v)
      if (count[v] == 0) {
        u = v;
        break;
      }
    if (u == kNoVertex) {
      std::vector<Vertex> ext;
      for (Vertex x : members)
        if (!a_set.contains(x)) ext.push_back(x);
      found = VertexSet(std::move(ext));
      return true;
    }
    std::vector<Vertex> options{u};
    options.insert(options.end(), g.neighbors(u).begin(), g.neighbors(u).end());
    for (Vertex v : options) {
      if (!cls.is_irredundant(v) || in_d[v]) continue;
      in_d[v] = 1;
      add(v, 1);
      members.push_back(v);
      if (self(self)) return true;
      members.pop_back();
      add(v, -1);
      in_d[v] = 0;
    }
    return false;
  };
  rec(rec);
  return found;
}

// A is in D_RN(G) iff it admits an irredundant extension.
inline bool brute_drn_member(const Graph& g, const Classification& cls, const VertexSet& a_set) {
  return find_irredundant_extension(g, cls, a_set).has_value();
}

}  // namespace domenum::oracle
