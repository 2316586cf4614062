#include "berge/core/graph.hpp"

#include <algorithm>
#include <string>

#include "berge/core/error.hpp"

namespace berge {

SimpleGraph::SimpleGraph(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw Error(Errc::VertexOutOfRange, "graph order " + std::to_string(n) + " outside 0..64");
  }
  adj_.assign(n, {});
}

void SimpleGraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n() || v >= n()) {
    throw Error(Errc::VertexOutOfRange, "graph edge endpoint out of range");
  }
  if (u == v) throw Error(Errc::SameVertex, "self-loops are not allowed");
  adj_[u].insert(v);
  adj_[v].insert(u);
}

void SimpleGraph::remove_edge(int u, int v) {
  adj_[u].erase(v);
  adj_[v].erase(u);
}

int SimpleGraph::edge_count() const {
  int twice = 0;
  for (VertexSet s : adj_) twice += s.size();
  return twice / 2;
}

std::vector<std::pair<int, int>> SimpleGraph::edge_list() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n(); ++u) {
    for (int v : adj_[u] - VertexSet::interval(0, u + 1)) out.emplace_back(u, v);
  }
  return out;
}

int BipartiteIncidence::incidence_count() const {
  int total = 0;
  for (const auto& row : right_adj) total += static_cast<int>(row.size());
  return total;
}

BipartiteIncidence incidence_graph(const Hypergraph& h) {
  BipartiteIncidence g;
  g.left_count = h.n();
  g.right_count = h.edge_count();
  g.left_adj.resize(h.n());
  g.right_adj.resize(h.edge_count());
  for (int v = 0; v < h.n(); ++v) {
    auto inc = h.incident(v);
    g.left_adj[v].assign(inc.begin(), inc.end());
  }
  for (int id = 0; id < h.edge_count(); ++id) g.right_adj[id] = h.edge(id).to_vector();
  return g;
}

SimpleGraph shadow2(const Hypergraph& h) {
  SimpleGraph g(h.n());
  for (VertexSet e : h.edges()) {
    for (int u : e) {
      for (int v : e - VertexSet::interval(0, u + 1)) g.add_edge(u, v);
    }
  }
  return g;
}

namespace {

void grow_clique(const SimpleGraph& g, int size, VertexSet candidates, int& best) {
  if (candidates.empty()) {
    best = std::max(best, size);
    return;
  }
  if (size + candidates.size() <= best) return;
  while (!candidates.empty()) {
    if (size + candidates.size() <= best) return;
    const int v = candidates.min();
    candidates.erase(v);
    grow_clique(g, size + 1, candidates & g.neighbors(v), best);
  }
}

}  // namespace

int max_clique_size(const SimpleGraph& g) {
  int best = 0;
  grow_clique(g, 0, VertexSet::universe(g.n()), best);
  return best;
}

}  // namespace berge
