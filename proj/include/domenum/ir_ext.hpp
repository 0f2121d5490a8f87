#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "domenum/extension.hpp"
#include "domenum/graph.hpp"
#include "domenum/redundancy.hpp"
#include "domenum/rn_enum.hpp"

namespace domenum {

namespace detail {

// Lexicographic cross product of candidate lists, one element from each.
class CrossProduct : public SolutionStream {
public:
  explicit CrossProduct(std::vector<std::vector<Vertex>> lists) : lists_(std::move(lists)), pos_(lists_.size(), 0) {
    for (const auto& l : lists_)
      if (l.empty()) done_ = true;
  }

  std::optional<VertexSet> next() override {
    if (done_) return std::nullopt;
    std::vector<Vertex> out;
    out.reserve(lists_.size());
    for (std::size_t i = 0; i < lists_.size(); ++i) out.push_back(lists_[i][pos_[i]]);
    std::size_t i = lists_.size();
    while (i > 0) {
      --i;
      if (++pos_[i] < lists_[i].size()) break;
      pos_[i] = 0;
      if (i == 0) done_ = true;
    }
    if (lists_.empty()) done_ = true;
    return VertexSet(std::move(out));
  }

private:
  std::vector<std::vector<Vertex>> lists_;
  std::vector<std::size_t> pos_;
  bool done_ = false;
};

class EmptyStream : public SolutionStream {
public:
  std::optional<VertexSet> next() override { return std::nullopt; }
};

}  // namespace detail

// DIR(A) for P7-free chordal graphs: one vertex from each clique component
// that A leaves undominated. Emits nothing when A is not in D_RN(G).
inline std::unique_ptr<SolutionStream> dir_p7(const Graph& g, const Classification& cls, const VertexSet& a_set) {
  auto view = view_of(g, cls, a_set);
  bool member = view.every_member_has_private;
  for (Vertex a : a_set) member = member && !view.red[a];
  if (!member) return std::make_unique<detail::EmptyStream>();
  std::vector<std::vector<Vertex>> lists;
  for (int i = 0; i < cls.component_count(); ++i)
    if (!view.full[i]) lists.push_back(cls.components[i].items());
  return std::make_unique<detail::CrossProduct>(std::move(lists));
}

// DIR(A,C) by backtracking over the vertices of C in index order: each vertex
// is first forced in, then forced out, and a branch is entered only when the
// extension problem with those constraints stays solvable.
class DirComponentStream : public SolutionStream {
public:
  DirComponentStream(const ComponentPosets& posets, const RedundantPartView& view, int comp)
      : posets_(&posets), comp_(comp), query_{component_instance(posets, view, comp), {}, {}},
        k_(posets.poset(comp).size()) {
    if (solve_icep(query_)) stack_.push_back({0, 0});
  }

  std::optional<VertexSet> next() override {
    while (!stack_.empty()) {
      Frame& f = stack_.back();
      if (f.level == k_) {
        std::vector<Vertex> out;
        for (Vertex v : query_.s_set) out.push_back(posets_->global(comp_, v));
        pop();
        return VertexSet::from_sorted(std::move(out));
      }
      const Vertex v = f.level;
      if (f.branch == 0) {
        f.branch = 1;
        query_.s_set.insert(v);
        if (solve_icep(query_)) {
          stack_.push_back({v + 1, 0});
          continue;
        }
        query_.s_set.erase(v);
      }
      if (f.branch == 1) {
        f.branch = 2;
        query_.q_set.insert(v);
        if (solve_icep(query_)) {
          stack_.push_back({v + 1, 0});
          continue;
        }
        query_.q_set.erase(v);
      }
      pop();
    }
    return std::nullopt;
  }

private:
  struct Frame {
    Vertex level;
    int branch;  // 1: level vertex in S, 2: level vertex in Q
  };

  void pop() {
    stack_.pop_back();
    if (stack_.empty()) return;
    const Frame& parent = stack_.back();
    if (parent.branch == 1) query_.s_set.erase(parent.level);
    else query_.q_set.erase(parent.level);
  }

  const ComponentPosets* posets_;
  int comp_;
  IcepQuery query_;
  Vertex k_;
  std::vector<Frame> stack_;
};

namespace detail {

// Odometer over per-component streams; the last component advances first and
// exhausted streams are rebuilt from scratch.
class DirProduct : public SolutionStream {
public:
  DirProduct(const Graph& g, const Classification& cls, std::shared_ptr<const ComponentPosets> posets,
             const VertexSet& a_set)
      : posets_(std::move(posets)), view_(view_of(g, cls, a_set)) {
    if (!is_in_drn(g, cls, *posets_, a_set)) {
      done_ = true;
      return;
    }
    for (int i = 0; i < cls.component_count(); ++i)
      if (!view_.full[i]) comps_.push_back(i);
    for (int c : comps_) {
      streams_.push_back(make(c));
      auto first = streams_.back()->next();
      if (!first) {
        done_ = true;
        return;
      }
      current_.push_back(std::move(*first));
    }
  }

  std::optional<VertexSet> next() override {
    if (done_) return std::nullopt;
    VertexSet out;
    for (const auto& part : current_) out = set_union(out, part);
    advance();
    return out;
  }

private:
  std::unique_ptr<SolutionStream> make(int comp) { return std::make_unique<DirComponentStream>(*posets_, view_, comp); }

  void advance() {
    std::size_t i = comps_.size();
    while (i > 0) {
      --i;
      if (auto s = streams_[i]->next()) {
        current_[i] = std::move(*s);
        return;
      }
      streams_[i] = make(comps_[i]);
      current_[i] = *streams_[i]->next();
    }
    done_ = true;
  }

  std::shared_ptr<const ComponentPosets> posets_;
  RedundantPartView view_;
  std::vector<int> comps_;
  std::vector<std::unique_ptr<SolutionStream>> streams_;
  std::vector<VertexSet> current_;
  bool done_ = false;
};

}  // namespace detail

// DIR(A,C) of one irredundant component.
inline std::unique_ptr<SolutionStream> enumerate_dir_component(const ComponentPosets& posets,
                                                                const RedundantPartView& view, int comp) {
  return std::make_unique<DirComponentStream>(posets, view, comp);
}

// DIR(A): unions of one member of DIR(A,C) per component left undominated by
// A. Emits nothing when A is not in D_RN(G).
inline std::unique_ptr<SolutionStream> enumerate_dir(const Graph& g, const Classification& cls, const VertexSet& a_set,
                                                     Mode mode) {
  if (mode == Mode::kP7) return dir_p7(g, cls, a_set);
  return std::make_unique<detail::DirProduct>(g, cls, std::make_shared<const ComponentPosets>(g, cls), a_set);
}

// P8 variant reusing component posets built once for the graph.
inline std::unique_ptr<SolutionStream> enumerate_dir(const Graph& g, const Classification& cls,
                                                     std::shared_ptr<const ComponentPosets> posets,
                                                     const VertexSet& a_set) {
  return std::make_unique<detail::DirProduct>(g, cls, std::move(posets), a_set);
}

}  // namespace domenum
