#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "domenum/errors.hpp"
#include "domenum/extension.hpp"
#include "domenum/graph.hpp"
#include "domenum/redundancy.hpp"

namespace domenum {

enum class Mode { kP7, kP8 };

// Pull-based enumeration session. Each call performs a bounded amount of work
// and returns the next solution, or nullopt once the stream is exhausted.
class SolutionStream {
public:
  virtual ~SolutionStream() = default;
  virtual std::optional<VertexSet> next() = 0;
};

// Drains up to `limit` solutions (all when limit is 0).
inline std::vector<VertexSet> collect(SolutionStream& stream, std::size_t limit = 0) {
  std::vector<VertexSet> out;
  while (limit == 0 || out.size() < limit) {
    auto s = stream.next();
    if (!s) break;
    out.push_back(std::move(*s));
  }
  return out;
}

inline void require_connected(const Graph& g) {
  if (!is_connected(g)) throw ClassError("the graph is disconnected; enumeration requires a connected graph");
}

// ---------------------------------------------------------------------------
// Membership and maximal generators through the extension problem.

inline bool is_in_drn(const Graph& g, const Classification& cls, const ComponentPosets& posets, const VertexSet& a_set) {
  auto view = view_of(g, cls, a_set);
  if (!view.every_member_has_private) return false;
  for (int i = 0; i < cls.component_count(); ++i)
    if (!view.full[i] && !solve_iep(component_instance(posets, view, i))) return false;
  return true;
}

inline bool is_in_drn(const Graph& g, const Classification& cls, const VertexSet& a_set) {
  return is_in_drn(g, cls, ComponentPosets(g, cls), a_set);
}

// With B = A u {c} in D_RN: is c the largest element whose removal stays in D_RN?
inline bool solve_mgp(const Graph& g, const Classification& cls, const ComponentPosets& posets, const VertexSet& a_set,
                      Vertex c) {
  VertexSet b = a_set.with(c);
  if (!is_in_drn(g, cls, posets, b.without(c))) return false;
  for (Vertex y : b)
    if (y > c && is_in_drn(g, cls, posets, b.without(y))) return false;
  return true;
}

inline bool solve_mgp(const Graph& g, const Classification& cls, const VertexSet& a_set, Vertex c) {
  return solve_mgp(g, cls, ComponentPosets(g, cls), a_set, c);
}

// ---------------------------------------------------------------------------
// Array engine for P7-free chordal graphs, where irredundant components are
// cliques and A u {c} is tested in O(deg(c)).

inline constexpr Vertex kNone = -1;

struct P7EngineState {
  std::vector<int> t1;                 // per component: vertices not dominated by A
  std::vector<int> t2;                 // per vertex: component index, kNone for redundant vertices
  std::vector<std::array<int, 2>> m1;  // per vertex a: |Priv_IR(A,a) n C^a| (-1 without C^a), |Priv_IR(A,a) \ C^a|
  std::vector<Vertex> m2;              // per vertex y: a with y in Priv_IR(A,a), kNone, or n during a trial
  std::vector<signed char> m3;         // per vertex y: 0 if y lies in C^{m2[y]}, 1 otherwise
  std::vector<Vertex> w;               // per vertex y: a member of A dominating y, or kNone
  Vertex rho = kNone;                  // largest member of A

  friend bool operator==(const P7EngineState&, const P7EngineState&) = default;
};

class P7Engine {
public:
  P7Engine(const Graph& g, const Classification& cls) : g_(&g), cls_(&cls) {
    const Vertex n = g.n();
    for (int i = 0; i < cls.component_count(); ++i) {
      const auto& comp = cls.components[i];
      for (Vertex u : comp) {
        std::size_t inside = 0;
        for (Vertex w : g.neighbors(u)) inside += cls.comp_of[w] == i;
        if (inside < comp.size() - 1)
          throw ClassError("irredundant component " + std::to_string(i) +
                           " is not a clique; the graph is not P7-free chordal");
      }
    }
    if (!cls.multi_partial.empty())
      throw ClassError("redundant vertex " + std::to_string(cls.multi_partial.front()) +
                       " is partially adjacent to two irredundant components; the graph is not P7-free chordal");
    s_.t1.resize(cls.components.size());
    for (int i = 0; i < cls.component_count(); ++i) s_.t1[i] = static_cast<int>(cls.components[i].size());
    s_.t2.assign(static_cast<std::size_t>(n), kNone);
    for (Vertex v : cls.ir) s_.t2[v] = cls.comp_of[v];
    s_.m1.resize(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) s_.m1[v] = blank_m1(v);
    s_.m2.assign(static_cast<std::size_t>(n), kNone);
    s_.m3.assign(static_cast<std::size_t>(n), 1);
    s_.w.assign(static_cast<std::size_t>(n), kNone);
    ir_nbrs_.resize(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v)
      for (Vertex u : g.neighbors(v))
        if (cls.is_irredundant(u)) ir_nbrs_[v].push_back(u);
  }

  const P7EngineState& state() const { return s_; }
  const std::vector<Vertex>& members() const { return members_; }
  std::uint64_t last_touches() const { return touches_; }

  // Adds c to A when A u {c} is in D_RN; otherwise leaves the state unchanged.
  bool try_candidate(Vertex c) {
    const Vertex trial = g_->n();
    touches_ = 0;
    bool newly_full = false;
    affected_.clear();
    touch(2);
    for (Vertex y : ir_nbrs_[c]) {
      touch(1);
      if (s_.w[y] == kNone) {
        s_.w[y] = c;
        s_.m2[y] = c;
        s_.m3[y] = s_.t2[y] == cls_->partial[c] ? 0 : 1;
        ++s_.m1[c][s_.m3[y]];
        if (--s_.t1[s_.t2[y]] == 0) newly_full = true;
        touch(6);
      } else if (s_.m2[y] != kNone) {
        Vertex a = s_.m2[y];
        --s_.m1[a][s_.m3[y]];
        s_.m2[y] = trial;
        affected_.push_back(a);
        touch(4);
      }
    }
    bool accept = newly_full;
    for (Vertex a : affected_) {
      touch(2);
      const auto& m = s_.m1[a];
      bool keeps = m[1] > 0 || (m[0] > 0 && s_.t1[cls_->partial[a]] == 0);
      if (!keeps) {
        accept = false;
        break;
      }
    }
    if (!accept) {
      undo(c, nullptr);
      return false;
    }
    std::vector<Vertex> stolen;
    for (Vertex y : ir_nbrs_[c]) {
      touch(1);
      if (s_.m2[y] == trial) {
        s_.m2[y] = kNone;
        stolen.push_back(y);
        touch(1);
      }
    }
    frames_.push_back({s_.rho, std::move(stolen)});
    members_.push_back(c);
    s_.rho = c;
    return true;
  }

  // Removes the most recently added member.
  void backtrack() {
    Vertex c = members_.back();
    members_.pop_back();
    Frame f = std::move(frames_.back());
    frames_.pop_back();
    undo(c, &f.stolen);
    s_.rho = f.rho;
  }

private:
  struct Frame {
    Vertex rho;
    std::vector<Vertex> stolen;  // private neighbors taken from other members
  };

  std::array<int, 2> blank_m1(Vertex v) const { return {cls_->partial[v] == kNoComponent ? -1 : 0, 0}; }

  void touch(std::uint64_t k) { touches_ += k; }

  void undo(Vertex c, const std::vector<Vertex>* stolen) {
    const Vertex trial = g_->n();
    for (Vertex y : ir_nbrs_[c]) {
      touch(1);
      if (s_.w[y] == c) {
        s_.w[y] = kNone;
        ++s_.t1[s_.t2[y]];
        s_.m2[y] = kNone;
        s_.m3[y] = 1;
        touch(5);
      } else if (s_.m2[y] == trial) {
        s_.m2[y] = s_.w[y];
        ++s_.m1[s_.w[y]][s_.m3[y]];
        touch(4);
      }
    }
    if (stolen)
      for (Vertex y : *stolen) {
        s_.m2[y] = s_.w[y];
        ++s_.m1[s_.w[y]][s_.m3[y]];
        touch(4);
      }
    s_.m1[c] = blank_m1(c);
    touch(2);
  }

  const Graph* g_;
  const Classification* cls_;
  P7EngineState s_;
  std::vector<std::vector<Vertex>> ir_nbrs_;
  std::vector<Vertex> members_;
  std::vector<Frame> frames_;
  std::vector<Vertex> affected_;
  std::uint64_t touches_ = 0;
};

// Tests A u {c} for c > rho; on acceptance c joins A.
inline bool p7_try_candidate(P7Engine& engine, Vertex c) { return engine.try_candidate(c); }

namespace detail {

// Depth-first traversal of the generation tree with an explicit stack.
// Even depths are reported on the way down, odd depths on the way up.
template <class Policy>
class RnStream : public SolutionStream {
public:
  explicit RnStream(Policy policy) : policy_(std::move(policy)) { stack_.push_back({0, false}); }

  std::optional<VertexSet> next() override {
    while (!stack_.empty()) {
      Frame& top = stack_.back();
      const std::size_t depth = stack_.size() - 1;
      if (!top.entered) {
        top.entered = true;
        top.pos = policy_.first_candidate();
        if (depth % 2 == 0) return policy_.current();
      }
      bool descended = false;
      const auto& rn = policy_.candidates();
      while (top.pos < rn.size()) {
        Vertex c = rn[top.pos++];
        if (policy_.try_add(c)) {
          descended = true;
          break;
        }
      }
      if (descended) {
        stack_.push_back({0, false});
        continue;
      }
      std::optional<VertexSet> out;
      if (depth % 2 == 1) out = policy_.current();
      stack_.pop_back();
      if (!stack_.empty()) policy_.remove_last();
      if (out) return out;
    }
    return std::nullopt;
  }

private:
  struct Frame {
    std::size_t pos;
    bool entered;
  };
  Policy policy_;
  std::vector<Frame> stack_;
};

class P7Policy {
public:
  P7Policy(const Graph& g, const Classification& cls) : engine_(std::make_unique<P7Engine>(g, cls)), rn_(cls.rn.items()) {}

  const std::vector<Vertex>& candidates() const { return rn_; }
  std::size_t first_candidate() const {
    Vertex rho = engine_->state().rho;
    return static_cast<std::size_t>(std::upper_bound(rn_.begin(), rn_.end(), rho) - rn_.begin());
  }
  bool try_add(Vertex c) { return engine_->try_candidate(c); }
  void remove_last() { engine_->backtrack(); }
  VertexSet current() const { return VertexSet::from_sorted(engine_->members()); }

private:
  std::unique_ptr<P7Engine> engine_;
  std::vector<Vertex> rn_;
};

class P8Policy {
public:
  P8Policy(const Graph& g, const Classification& cls, std::shared_ptr<const ComponentPosets> posets)
      : g_(&g), cls_(&cls), posets_(std::move(posets)), rn_(cls.rn.items()) {}

  const std::vector<Vertex>& candidates() const { return rn_; }
  std::size_t first_candidate() const { return 0; }
  bool try_add(Vertex c) {
    if (a_.contains(c)) return false;
    VertexSet b = a_.with(c);
    if (!is_in_drn(*g_, *cls_, *posets_, b)) return false;
    for (Vertex y : b)
      if (y > c && is_in_drn(*g_, *cls_, *posets_, b.without(y))) return false;
    a_ = std::move(b);
    added_.push_back(c);
    return true;
  }
  void remove_last() {
    a_.erase(added_.back());
    added_.pop_back();
  }
  VertexSet current() const { return a_; }

private:
  const Graph* g_;
  const Classification* cls_;
  std::shared_ptr<const ComponentPosets> posets_;
  std::vector<Vertex> rn_;
  VertexSet a_;
  std::vector<Vertex> added_;
};

}  // namespace detail

// Every member of D_RN(G) exactly once, starting with the empty set.
// Throws ClassError when g is disconnected or its irredundant components
// contradict the requested class.
inline std::unique_ptr<SolutionStream> enumerate_rn(const Graph& g, const Classification& cls, Mode mode) {
  require_connected(g);
  if (mode == Mode::kP7) return std::make_unique<detail::RnStream<detail::P7Policy>>(detail::P7Policy(g, cls));
  return std::make_unique<detail::RnStream<detail::P8Policy>>(
      detail::P8Policy(g, cls, std::make_shared<const ComponentPosets>(g, cls)));
}

// P8 variant reusing component posets built once for the graph.
inline std::unique_ptr<SolutionStream> enumerate_rn(const Graph& g, const Classification& cls,
                                                    std::shared_ptr<const ComponentPosets> posets) {
  require_connected(g);
  return std::make_unique<detail::RnStream<detail::P8Policy>>(detail::P8Policy(g, cls, std::move(posets)));
}

}  // namespace domenum
