#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "berge/core/vertex_set.hpp"

namespace berge {

/**
 * An r-uniform hypergraph on vertices 0..n-1 with an ordered, duplicate-free
 * edge list. Immutable once built; edge ids are positions in the input list.
 */
class Hypergraph {
 public:
  /// Validating constructor. Throws Error with BadUniformity, VertexOutOfRange,
  /// NonUniformEdge or DuplicateEdge.
  static Hypergraph make(int n, int r, const std::vector<std::vector<int>>& edges);
  static Hypergraph make(int n, int r, std::vector<VertexSet> edges);
  /// Literal edge lists, e.g. make(4, 3, {{0, 1, 2}, {1, 2, 3}}).
  static Hypergraph make(int n, int r, std::initializer_list<std::initializer_list<int>> edges);

  int n() const { return n_; }
  int r() const { return r_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  VertexSet edge(int id) const { return edges_[id]; }
  std::span<const VertexSet> edges() const { return edges_; }

  /// Ids of edges containing v, ascending.
  std::span<const int> incident(int v) const { return incident_[v]; }
  /// Ids of edges containing both u and v, ascending. Requires u != v.
  std::span<const int> covering(int u, int v) const { return covering_[u * n_ + v]; }

  /// Same edge ids, vertices renamed by new_label[old] (a permutation of 0..n-1).
  Hypergraph relabeled(std::span<const int> new_label) const;
  /// Adds edges after validating them against the existing ones.
  Hypergraph with_edges(std::span<const VertexSet> extra) const;

  bool operator==(const Hypergraph& o) const { return n_ == o.n_ && r_ == o.r_ && edges_ == o.edges_; }

 private:
  Hypergraph(int n, int r, std::vector<VertexSet> edges);
  void index();

  int n_ = 0;
  int r_ = 0;
  std::vector<VertexSet> edges_;
  std::vector<std::vector<int>> incident_;
  std::vector<std::vector<int>> covering_;
};

int degree(const Hypergraph& h, int v);
int codegree(const Hypergraph& h, int u, int v);
int min_degree(const Hypergraph& h);

}  // namespace berge
