#pragma once

#include <span>
#include <utility>
#include <vector>

#include "berge/core/graph.hpp"
#include "berge/core/hypergraph.hpp"
#include "berge/oracle/berge_cycle.hpp"
#include "berge/oracle/frame.hpp"

namespace berge {

/**
 * A graph whose cycles lift to Berge cycles of the same length. Fixed edges
 * carry their own hypergraph edge (injectively); every free pair has
 * co-degree at least r among the hypergraph edges not used by fixed edges.
 */
class CompatGraph {
 public:
  struct FixedEdge {
    int u = 0;
    int v = 0;
    int edge_id = -1;
  };

  /// Throws InvariantViolated if the fixed/free data breaks a compatibility invariant.
  static CompatGraph make(const Hypergraph& h, std::vector<FixedEdge> fixed, std::vector<std::pair<int, int>> free);
  /// No invariant checks; lets tests feed deliberately broken graphs to lift_graph_cycle.
  static CompatGraph make_unchecked(int n, std::vector<FixedEdge> fixed, std::vector<std::pair<int, int>> free);

  int n() const { return graph_.n(); }
  const SimpleGraph& graph() const { return graph_; }
  std::span<const FixedEdge> fixed_edges() const { return fixed_; }
  std::span<const std::pair<int, int>> free_edges() const { return free_; }
  /// Hypergraph edge assigned to {u, v}, or -1 if the pair is not fixed.
  int fixed_edge(int u, int v) const;

 private:
  CompatGraph(int n, std::vector<FixedEdge> fixed, std::vector<std::pair<int, int>> free);

  SimpleGraph graph_;
  std::vector<FixedEdge> fixed_;
  std::vector<std::pair<int, int>> free_;
  std::vector<int> fixed_at_;  // n*n, -1 when not fixed
};

/// Fixed edges {i, i+1} -> e_i; free edges are the other pairs with extra co-degree >= r.
CompatGraph build_compat_graph(const HamiltonianFrame& frame);

/**
 * Variants of `g` obtained when some consecutive pair {t, t+1} has extra
 * co-degree >= r: a new edge {t, h} or {h, h+2} inside e_t takes e_t as its
 * fixed image and {t, t+1} becomes free. Only pairs not already in g are added.
 */
std::vector<CompatGraph> compat_augmentations(const HamiltonianFrame& frame, const CompatGraph& g);

/**
 * Lifts a cycle u_0 ... u_{l-1} of g: fixed edges keep their image, free edges
 * are matched into the remaining hypergraph edges by maximum bipartite matching.
 * Throws PreconditionViolated if `cycle` is not a cycle of g, MatchingFailed if
 * the free edges cannot all be matched.
 */
BergeCycle lift_graph_cycle(const Hypergraph& h, const CompatGraph& g, const std::vector<int>& cycle);

}  // namespace berge
