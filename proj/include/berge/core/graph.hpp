#pragma once

#include <utility>
#include <vector>

#include "berge/core/hypergraph.hpp"
#include "berge/core/vertex_set.hpp"

namespace berge {

/// Simple undirected graph on 0..n-1 (n <= 64), one adjacency word per vertex.
class SimpleGraph {
 public:
  explicit SimpleGraph(int n);

  int n() const { return static_cast<int>(adj_.size()); }
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  bool adjacent(int u, int v) const { return adj_[u].contains(v); }
  VertexSet neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].size(); }
  int edge_count() const;
  /// Edges {u, v} with u < v in lexicographic order.
  std::vector<std::pair<int, int>> edge_list() const;

  bool operator==(const SimpleGraph&) const = default;

 private:
  std::vector<VertexSet> adj_;
};

/// Vertex/edge incidence structure of a hypergraph (left = vertices, right = edges).
struct BipartiteIncidence {
  int left_count = 0;
  int right_count = 0;
  std::vector<std::vector<int>> left_adj;   // vertex -> edge ids containing it
  std::vector<std::vector<int>> right_adj;  // edge id -> its vertices

  int incidence_count() const;
};

BipartiteIncidence incidence_graph(const Hypergraph& h);

/// uv adjacent iff some edge contains both.
SimpleGraph shadow2(const Hypergraph& h);

/// Size of a largest clique (exact; intended for n <= 64 sparse-ish graphs).
int max_clique_size(const SimpleGraph& g);

}  // namespace berge
