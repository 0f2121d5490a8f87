#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "domenum/errors.hpp"
#include "domenum/graph.hpp"
#include "domenum/recognition.hpp"
#include "domenum/redundancy.hpp"

namespace domenum {

// One irredundant component C (as a tree poset over local vertices
// 0..|C|-1) together with the forbidden sets X_1..X_p (irredundant private
// neighbors of the red elements of A inside C) and the set Y of the other
// vertices of C already dominated by A. Z = C \ (X u Y) must be dominated.
struct ExtensionInstance {
  std::reference_wrapper<const TreePoset> poset;
  std::vector<VertexSet> x_sets;
  VertexSet y_set;

  const TreePoset& tree() const { return poset.get(); }
};

// Extension instance with forced-in vertices S and forced-out vertices Q.
struct IcepQuery {
  ExtensionInstance instance;
  VertexSet s_set;
  VertexSet q_set;
};

namespace detail {

enum class Role : signed char { kZ = -2, kY = -1 };  // values >= 0 index an X set

inline std::vector<int> validate_roles(const ExtensionInstance& inst) {
  const Vertex n = inst.tree().size();
  std::vector<int> role(static_cast<std::size_t>(n), static_cast<int>(Role::kZ));
  auto claim = [&](Vertex v, int r) {
    if (v < 0 || v >= n) throw InstanceError("vertex " + std::to_string(v) + " outside the component");
    if (role[v] != static_cast<int>(Role::kZ))
      throw InstanceError("vertex " + std::to_string(v) + " belongs to two of X_1..X_p, Y");
    role[v] = r;
  };
  for (int j = 0; j < static_cast<int>(inst.x_sets.size()); ++j)
    for (Vertex v : inst.x_sets[j]) claim(v, j);
  for (Vertex v : inst.y_set) claim(v, static_cast<int>(Role::kY));
  return role;
}

// F: vertices of Z without a strict descendant in Z.
inline std::vector<char> maximal_z(const TreePoset& t, const std::vector<int>& role) {
  const Vertex n = t.size();
  std::vector<char> z_below(static_cast<std::size_t>(n), 0), in_f(static_cast<std::size_t>(n), 0);
  for (int i = n - 1; i >= 0; --i) {
    Vertex v = t.preorder[i];
    bool is_z = role[v] == static_cast<int>(Role::kZ);
    if (is_z && !z_below[v]) in_f[v] = 1;
    if (v != t.root && (is_z || z_below[v])) z_below[t.parent[v]] = 1;
  }
  return in_f;
}

// Nearest ancestor-or-self with mark[] set, per vertex (kNoVertex if none).
inline std::vector<Vertex> nearest_marked_ancestor(const TreePoset& t, const std::vector<char>& mark) {
  std::vector<Vertex> owner(static_cast<std::size_t>(t.size()), kNoVertex);
  for (Vertex v : t.preorder)
    owner[v] = mark[v] ? v : (v == t.root ? kNoVertex : owner[t.parent[v]]);
  return owner;
}

inline bool is_chain(const TreePoset& t, std::vector<Vertex> r) {
  std::sort(r.begin(), r.end(), [&](Vertex a, Vertex b) { return t.depth[a] < t.depth[b]; });
  for (std::size_t i = 1; i < r.size(); ++i)
    if (!t.is_ancestor_or_self(r[i - 1], r[i])) return false;
  return true;
}

[[noreturn]] inline void coupled_forbidden_set() {
  throw ClassError(
      "a forbidden private-neighbor set lies below two maximal undominated vertices of one irredundant component; "
      "the extension problem does not decompose (the graph is not P8-free chordal)");
}

}  // namespace detail

// Members of Z with no strict descendant in Z.
inline VertexSet maximal_undominated(const ExtensionInstance& inst) {
  auto role = detail::validate_roles(inst);
  auto in_f = detail::maximal_z(inst.tree(), role);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < inst.tree().size(); ++v)
    if (in_f[v]) out.push_back(v);
  return VertexSet::from_sorted(std::move(out));
}

// Is there D in C dominating Z = C \ (X u Y) and dominating none of X_1..X_p?
//
// Linear-time leaf-marking procedure. A set D dominating Z may be assumed to
// consist of one leaf below each element of F; the strict ancestors of F are
// then always dominated. A forbidden set whose remaining part R lies below a
// single x in F is dominated by a leaf t iff R is a chain with its deepest
// element above t, so that element is blocked. A forbidden set that cannot be
// reached from F is never dominated and is skipped. Throws ClassError when a
// forbidden set spreads below two elements of F and the answer depends on it.
inline bool solve_iep(const ExtensionInstance& inst) {
  const TreePoset& t = inst.tree();
  const Vertex n = t.size();
  auto role = detail::validate_roles(inst);
  auto in_f = detail::maximal_z(t, role);

  std::vector<char> f_minus(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) {
    if (!in_f[v]) continue;
    for (Vertex u = t.parent[v]; u != kNoVertex && !f_minus[u]; u = t.parent[u]) f_minus[u] = 1;
  }
  auto owner = detail::nearest_marked_ancestor(t, in_f);

  std::vector<char> blocked(static_cast<std::size_t>(n), 0);
  bool coupled = false;
  for (const VertexSet& x : inst.x_sets) {
    std::vector<Vertex> rest;
    for (Vertex v : x)
      if (!f_minus[v]) rest.push_back(v);
    if (rest.empty()) return false;
    Vertex o = owner[rest.front()];
    bool reachable = o != kNoVertex;
    for (Vertex v : rest) {
      if (owner[v] == kNoVertex) reachable = false;
      else if (owner[v] != o) coupled = true;
    }
    if (!reachable) continue;
    if (std::any_of(rest.begin(), rest.end(), [&](Vertex v) { return owner[v] != o; })) continue;
    if (detail::is_chain(t, rest))
      blocked[*std::max_element(rest.begin(), rest.end(), [&](Vertex a, Vertex b) { return t.depth[a] < t.depth[b]; })] = 1;
  }

  // good[v]: some leaf of v's subtree has no blocked vertex on its path from v.
  std::vector<char> good(static_cast<std::size_t>(n), 0);
  for (int i = n - 1; i >= 0; --i) {
    Vertex v = t.preorder[i];
    if (blocked[v]) {
      good[v] = 0;
      continue;
    }
    if (t.is_leaf(v)) good[v] = 1;
    else
      for (Vertex c : t.children[v]) good[v] = good[v] || good[c];
  }
  for (Vertex v = 0; v < n; ++v)
    if (in_f[v] && !good[v]) return false;
  if (coupled) detail::coupled_forbidden_set();
  return true;
}

// Is there a minimal D in C dominating Z and none of X_1..X_p with S in D and
// D disjoint from Q?
//
// Each s in S needs a private neighbor in Z that the rest of D leaves alone;
// these become extra forbidden sets for D \ S. Every element x of F not
// dominated by S needs one more vertex of D comparable to it. When Q removes
// all of x's subtree, the deepest admissible strict ancestor is the cheapest
// choice and is fixed up front; otherwise some y >= x outside Q is chosen, and
// the forbidden sets local to x's subtree decide which y are admissible.
inline bool solve_icep(const IcepQuery& query) {
  const ExtensionInstance& inst = query.instance;
  const TreePoset& t = inst.tree();
  const Vertex n = t.size();
  auto role = detail::validate_roles(inst);
  std::vector<char> in_s(static_cast<std::size_t>(n), 0), in_q(static_cast<std::size_t>(n), 0);
  for (Vertex v : query.s_set) {
    if (v < 0 || v >= n) throw InstanceError("S vertex outside the component");
    in_s[v] = 1;
  }
  for (Vertex v : query.q_set) {
    if (v < 0 || v >= n) throw InstanceError("Q vertex outside the component");
    if (in_s[v]) throw InstanceError("S and Q overlap on vertex " + std::to_string(v));
    in_q[v] = 1;
  }
  auto in_f = detail::maximal_z(t, role);

  // S-domination counts and the private neighbors of each s inside Z.
  std::vector<int> s_count(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex s : query.s_set) s_count[v] += t.comparable(v, s) ? 1 : 0;
  std::vector<VertexSet> extra;
  for (Vertex s : query.s_set) {
    std::vector<Vertex> priv;
    for (Vertex v = 0; v < n; ++v)
      if (role[v] == static_cast<int>(detail::Role::kZ) && s_count[v] == 1 && t.comparable(v, s)) priv.push_back(v);
    if (priv.empty()) return false;
    extra.push_back(VertexSet::from_sorted(std::move(priv)));
  }

  // covered_by_rest[v]: dominated by D \ S whatever the free choices are.
  std::vector<char> covered(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> needy;
  for (Vertex x = 0; x < n; ++x) {
    if (!in_f[x] || s_count[x] > 0) continue;
    auto sub = t.subtree(x);
    if (std::any_of(sub.begin(), sub.end(), [&](Vertex y) { return !in_q[y]; })) {
      needy.push_back(x);
      continue;
    }
    Vertex a = t.parent[x];
    while (a != kNoVertex && in_q[a]) a = t.parent[a];
    if (a == kNoVertex) return false;
    for (Vertex u = a; u != kNoVertex; u = t.parent[u]) covered[u] = 1;
    for (Vertex y : t.subtree(a)) covered[y] = 1;
  }
  std::vector<char> free_choice(static_cast<std::size_t>(n), 0);
  for (Vertex x : needy)
    if (!covered[x]) {
      free_choice[x] = 1;
      for (Vertex u = t.parent[x]; u != kNoVertex; u = t.parent[u]) covered[u] = 1;
    }
  auto owner = detail::nearest_marked_ancestor(t, free_choice);

  std::vector<std::vector<std::vector<Vertex>>> local(static_cast<std::size_t>(n));
  bool coupled = false;
  auto add_constraint = [&](const VertexSet& x, bool s_dominates_too) {
    std::vector<Vertex> rest;
    for (Vertex v : x)
      if (!covered[v] && !(s_dominates_too && s_count[v] > 0)) rest.push_back(v);
    if (rest.empty()) return false;
    Vertex o = owner[rest.front()];
    for (Vertex v : rest) {
      if (owner[v] == kNoVertex) return true;  // out of reach of every free choice
      if (owner[v] != o) {
        coupled = true;
        return true;
      }
    }
    local[o].push_back(std::move(rest));
    return true;
  };
  for (const VertexSet& x : inst.x_sets)
    if (!add_constraint(x, true)) return false;
  for (const VertexSet& x : extra)
    if (!add_constraint(x, false)) return false;

  for (Vertex x = 0; x < n; ++x) {
    if (!free_choice[x]) continue;
    bool found = false;
    for (Vertex y : t.subtree(x)) {
      if (in_q[y]) continue;
      bool ok = std::all_of(local[x].begin(), local[x].end(), [&](const std::vector<Vertex>& r) {
        return std::any_of(r.begin(), r.end(), [&](Vertex e) { return !t.comparable(y, e); });
      });
      if (ok) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  if (coupled) detail::coupled_forbidden_set();
  return true;
}

// Tree posets of all irredundant components, over component-local indices
// (local index = rank of the vertex inside its component).
class ComponentPosets {
public:
  // Throws ClassError when an irredundant component is not trivially perfect.
  ComponentPosets(const Graph& g, const Classification& cls) : cls_(&cls), local_(static_cast<std::size_t>(g.n()), kNoVertex) {
    posets_.reserve(cls.components.size());
    for (int i = 0; i < cls.component_count(); ++i) {
      const VertexSet& comp = cls.components[i];
      Vertex k = 0;
      for (Vertex v : comp) local_[v] = k++;
      auto sub = induced_subgraph(g, comp);
      auto tp = build_tree_poset(sub.graph);
      if (!tp) {
        std::string w;
        for (Vertex v : tp.failure->witness) w += " " + std::to_string(comp[static_cast<std::size_t>(v)]);
        throw ClassError(std::string("irredundant component ") + std::to_string(i) + " contains an induced " +
                         (tp.failure->kind == NotTriviallyPerfect::Kind::kP4 ? "P4" : "C4") + ":" + w +
                         "; the graph is not P8-free chordal");
      }
      posets_.push_back(std::move(*tp.poset));
    }
  }

  const TreePoset& poset(int comp) const { return posets_[comp]; }
  const VertexSet& component(int comp) const { return cls_->components[comp]; }
  Vertex local(Vertex v) const { return local_[v]; }
  Vertex global(int comp, Vertex local_index) const { return cls_->components[comp][static_cast<std::size_t>(local_index)]; }

private:
  const Classification* cls_;
  std::vector<TreePoset> posets_;
  std::vector<Vertex> local_;
};

// How a set A of redundant vertices dominates the irredundant vertices.
struct RedundantPartView {
  std::vector<int> count;     // |N[v] n A| per irredundant v
  std::vector<Vertex> owner;  // the member dominating v when count[v] == 1
  std::vector<char> full;     // per component: C inside N(A)
  std::vector<char> red;      // per vertex, set for red members of A
  bool every_member_has_private = true;
};

inline RedundantPartView view_of(const Graph& g, const Classification& cls, const VertexSet& a_set) {
  RedundantPartView view;
  const auto n = static_cast<std::size_t>(g.n());
  view.count.assign(n, 0);
  view.owner.assign(n, kNoVertex);
  view.red.assign(n, 0);
  view.full.assign(cls.components.size(), 1);
  for (Vertex a : a_set) {
    if (a < 0 || a >= g.n() || cls.is_irredundant(a))
      throw std::invalid_argument("vertex " + std::to_string(a) + " is not a redundant vertex");
    for (Vertex w : g.neighbors(a))
      if (cls.is_irredundant(w) && view.count[w]++ == 0) view.owner[w] = a;
  }
  for (Vertex v : cls.ir)
    if (view.count[v] == 0) view.full[cls.comp_of[v]] = 0;
  for (Vertex a : a_set) {
    bool has_private = false, blue = false;
    for (Vertex w : g.neighbors(a))
      if (cls.is_irredundant(w) && view.count[w] == 1) {
        has_private = true;
        blue = blue || view.full[cls.comp_of[w]];
      }
    view.every_member_has_private = view.every_member_has_private && has_private;
    view.red[a] = !blue;
  }
  return view;
}

// The extension instance of component `comp` for the redundant part behind `view`.
inline ExtensionInstance component_instance(const ComponentPosets& posets, const RedundantPartView& view, int comp) {
  std::vector<std::pair<Vertex, std::vector<Vertex>>> groups;  // red owner -> local private neighbors
  std::vector<Vertex> y;
  Vertex k = 0;
  for (Vertex v : posets.component(comp)) {
    Vertex lv = k++;
    if (view.count[v] == 0) continue;
    if (view.count[v] == 1 && view.red[view.owner[v]]) {
      auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& p) { return p.first == view.owner[v]; });
      if (it == groups.end()) groups.push_back({view.owner[v], {lv}});
      else it->second.push_back(lv);
    } else {
      y.push_back(lv);
    }
  }
  std::sort(groups.begin(), groups.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  ExtensionInstance inst{std::cref(posets.poset(comp)), {}, VertexSet::from_sorted(std::move(y))};
  for (auto& [owner, members] : groups) inst.x_sets.push_back(VertexSet::from_sorted(std::move(members)));
  return inst;
}

}  // namespace domenum
