#pragma once

#include <cassert>
#include <memory>
#include <optional>

#include "domenum/extension.hpp"
#include "domenum/graph.hpp"
#include "domenum/ir_ext.hpp"
#include "domenum/redundancy.hpp"
#include "domenum/rn_enum.hpp"

namespace domenum {

// D dominates IR(G) and every member keeps an irredundant private neighbor.
inline bool is_minimal_dominating(const Graph& g, const Classification& cls, const VertexSet& d) {
  std::vector<int> count(static_cast<std::size_t>(g.n()), 0);
  for (Vertex x : d) {
    ++count[x];
    for (Vertex w : g.neighbors(x)) ++count[w];
  }
  for (Vertex v : cls.ir)
    if (count[v] == 0) return false;
  for (Vertex x : d) {
    bool has_private = cls.is_irredundant(x) && count[x] == 1;
    for (Vertex w : g.neighbors(x)) has_private = has_private || (cls.is_irredundant(w) && count[w] == 1);
    if (!has_private) return false;
  }
  return true;
}

namespace detail {

// For each redundant part A, every A u I with I in DIR(A).
class DomStream : public SolutionStream {
public:
  DomStream(Graph g, Mode mode)
      : g_(std::make_unique<Graph>(std::move(g))), cls_(std::make_unique<Classification>(classify(*g_))), mode_(mode) {
    require_connected(*g_);
    if (mode_ == Mode::kP8) {
      posets_ = std::make_shared<const ComponentPosets>(*g_, *cls_);
      rn_ = enumerate_rn(*g_, *cls_, posets_);
    } else {
      rn_ = enumerate_rn(*g_, *cls_, Mode::kP7);
    }
  }

  const Graph& graph() const { return *g_; }
  const Classification& classification() const { return *cls_; }

  std::optional<VertexSet> next() override {
    for (;;) {
      if (dir_) {
        if (auto i = dir_->next()) {
          VertexSet d = set_union(a_, *i);
          assert(is_minimal_dominating(*g_, *cls_, d));
          return d;
        }
        dir_.reset();
      }
      auto a = rn_->next();
      if (!a) return std::nullopt;
      a_ = std::move(*a);
      dir_ = mode_ == Mode::kP8 ? enumerate_dir(*g_, *cls_, posets_, a_) : dir_p7(*g_, *cls_, a_);
    }
  }

private:
  std::unique_ptr<Graph> g_;
  std::unique_ptr<Classification> cls_;
  Mode mode_;
  std::shared_ptr<const ComponentPosets> posets_;
  std::unique_ptr<SolutionStream> rn_;
  std::unique_ptr<SolutionStream> dir_;
  VertexSet a_;
};

}  // namespace detail

// Every minimal dominating set of g exactly once. The stream owns a copy of
// the graph. Throws ClassError when g is disconnected or its irredundant
// components contradict the requested class.
inline std::unique_ptr<SolutionStream> enumerate_dom(const Graph& g, Mode mode) {
  return std::make_unique<detail::DomStream>(g, mode);
}

}  // namespace domenum
