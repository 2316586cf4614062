#include "berge/core/hypergraph.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "berge/core/error.hpp"

namespace berge {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::NonUniformEdge: return "NonUniformEdge";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::VertexOutOfRange: return "VertexOutOfRange";
    case Errc::BadUniformity: return "BadUniformity";
    case Errc::SameVertex: return "SameVertex";
    case Errc::LengthOutOfRange: return "LengthOutOfRange";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::NotAChord: return "NotAChord";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::NotSsc: return "NotSsc";
    case Errc::HypothesesNotMet: return "HypothesesNotMet";
    case Errc::ExtractionFailed: return "ExtractionFailed";
    case Errc::MatchingFailed: return "MatchingFailed";
    case Errc::BadParameters: return "BadParameters";
    case Errc::InvariantViolated: return "InvariantViolated";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

void check_shape(int n, int r) {
  if (n < 1 || n > kMaxVertices) {
    throw Error(Errc::VertexOutOfRange, "vertex count " + std::to_string(n) + " outside 1..64");
  }
  if (r < 2 || r > n) {
    throw Error(Errc::BadUniformity,
                "uniformity " + std::to_string(r) + " outside 2.." + std::to_string(n));
  }
}

void check_edges(int n, int r, const std::vector<VertexSet>& edges) {
  const VertexSet all = VertexSet::universe(n);
  std::set<std::uint64_t> seen;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!edges[i].is_subset_of(all)) {
      throw Error(Errc::VertexOutOfRange, "edge " + std::to_string(i) + " has a vertex >= n");
    }
    if (edges[i].size() != r) {
      throw Error(Errc::NonUniformEdge, "edge " + std::to_string(i) + " has " +
                                            std::to_string(edges[i].size()) + " vertices, expected " +
                                            std::to_string(r));
    }
    if (!seen.insert(edges[i].bits()).second) {
      throw Error(Errc::DuplicateEdge, "edge " + std::to_string(i) + " repeats an earlier edge");
    }
  }
}

}  // namespace

Hypergraph::Hypergraph(int n, int r, std::vector<VertexSet> edges)
    : n_(n), r_(r), edges_(std::move(edges)) {
  index();
}

Hypergraph Hypergraph::make(int n, int r, const std::vector<std::vector<int>>& edges) {
  check_shape(n, r);
  std::vector<VertexSet> sets;
  sets.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    VertexSet s;
    for (int v : edges[i]) {
      if (v < 0 || v >= n) {
        throw Error(Errc::VertexOutOfRange,
                    "edge " + std::to_string(i) + " names vertex " + std::to_string(v));
      }
      if (s.contains(v)) {
        throw Error(Errc::NonUniformEdge, "edge " + std::to_string(i) + " repeats vertex " +
                                              std::to_string(v));
      }
      s.insert(v);
    }
    sets.push_back(s);
  }
  check_edges(n, r, sets);
  return Hypergraph(n, r, std::move(sets));
}

Hypergraph Hypergraph::make(int n, int r, std::initializer_list<std::initializer_list<int>> edges) {
  std::vector<std::vector<int>> lists;
  for (auto e : edges) lists.emplace_back(e);
  return make(n, r, lists);
}

Hypergraph Hypergraph::make(int n, int r, std::vector<VertexSet> edges) {
  check_shape(n, r);
  check_edges(n, r, edges);
  return Hypergraph(n, r, std::move(edges));
}

void Hypergraph::index() {
  incident_.assign(n_, {});
  covering_.assign(static_cast<std::size_t>(n_) * n_, {});
  for (int id = 0; id < edge_count(); ++id) {
    const VertexSet e = edges_[id];
    for (int v : e) {
      incident_[v].push_back(id);
      for (int u : e) {
        if (u != v) covering_[v * n_ + u].push_back(id);
      }
    }
  }
}

Hypergraph Hypergraph::relabeled(std::span<const int> new_label) const {
  std::vector<VertexSet> mapped;
  mapped.reserve(edges_.size());
  for (VertexSet e : edges_) {
    VertexSet m;
    for (int v : e) m.insert(new_label[v]);
    mapped.push_back(m);
  }
  return Hypergraph(n_, r_, std::move(mapped));
}

Hypergraph Hypergraph::with_edges(std::span<const VertexSet> extra) const {
  std::vector<VertexSet> all = edges_;
  all.insert(all.end(), extra.begin(), extra.end());
  return make(n_, r_, std::move(all));
}

int degree(const Hypergraph& h, int v) {
  if (v < 0 || v >= h.n()) throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(v));
  return static_cast<int>(h.incident(v).size());
}

int codegree(const Hypergraph& h, int u, int v) {
  if (u < 0 || u >= h.n()) throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(u));
  if (v < 0 || v >= h.n()) throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(v));
  if (u == v) throw Error(Errc::SameVertex, "co-degree needs two distinct vertices");
  return static_cast<int>(h.covering(u, v).size());
}

int min_degree(const Hypergraph& h) {
  int best = h.edge_count();
  for (int v = 0; v < h.n(); ++v) best = std::min(best, static_cast<int>(h.incident(v).size()));
  return best;
}

}  // namespace berge
