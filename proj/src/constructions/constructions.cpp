#include "berge/constructions/constructions.hpp"

#include <string>
#include <vector>

#include "berge/core/error.hpp"

namespace berge {

namespace {

[[noreturn]] void bad(const std::string& why) { throw Error(Errc::BadParameters, why); }

std::string nr(int n, int r) { return "n=" + std::to_string(n) + ", r=" + std::to_string(r); }

/// Every r-subset of `pool` (ascending), in lexicographic order.
void append_subsets(const std::vector<int>& pool, int r, std::vector<VertexSet>& out) {
  const int m = static_cast<int>(pool.size());
  if (r > m) return;
  std::vector<int> idx(r);
  for (int i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    VertexSet s;
    for (int i : idx) s.insert(pool[i]);
    out.push_back(s);
    int i = r - 1;
    while (i >= 0 && idx[i] == m - r + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<int> range(int lo, int hi) {
  std::vector<int> v;
  for (int i = lo; i < hi; ++i) v.push_back(i);
  return v;
}

void check_low_uniformity(int n, int r) {
  if (n < 5 || n > kMaxVertices) bad("vertex count out of range: " + nr(n, r));
  if (r < 2 || r > (n - 1) / 2) bad("need 2 <= r <= (n-1)/2: " + nr(n, r));
}

}  // namespace

Hypergraph two_cliques(int n, int r, bool bridge) {
  check_low_uniformity(n, r);
  if (bridge && n % 2 != 0) bad("bridging edge needs n even: " + nr(n, r));
  std::vector<VertexSet> edges;
  if (n % 2 != 0) {
    const int h = (n + 1) / 2;
    append_subsets(range(0, h), r, edges);
    append_subsets(range(h - 1, n), r, edges);
  } else {
    append_subsets(range(0, n / 2), r, edges);
    append_subsets(range(n / 2, n), r, edges);
    if (bridge) {
      VertexSet e = VertexSet::interval(0, r - 1);
      e.insert(n / 2);
      edges.push_back(e);
    }
  }
  return Hypergraph::make(n, r, std::move(edges));
}

Hypergraph split_dominating(int n, int r, bool extra) {
  check_low_uniformity(n, r);
  if (extra && n % 2 != 0) bad("extra edge needs n even: " + nr(n, r));
  const int a = (n - 1) / 2;
  std::vector<VertexSet> all;
  append_subsets(range(0, n), r, all);
  std::vector<VertexSet> edges;
  const VertexSet v2 = VertexSet::interval(a, n);
  for (VertexSet e : all) {
    if ((e & v2).size() <= 1) edges.push_back(e);
  }
  if (extra) {
    if (r < 2) bad("extra edge needs r >= 2");
    VertexSet e = VertexSet::interval(0, r - 2);
    e.insert(a);
    e.insert(a + 1);
    edges.push_back(e);
  }
  return Hypergraph::make(n, r, std::move(edges));
}

Hypergraph tight_cycle(int n, int r) {
  if (n < 3 || n > kMaxVertices || r < 2 || r >= n) bad("need 2 <= r < n <= 64: " + nr(n, r));
  std::vector<VertexSet> edges;
  for (int i = 0; i < n; ++i) edges.push_back(rotate(VertexSet::interval(0, r), i, n));
  return Hypergraph::make(n, r, std::move(edges));
}

Hypergraph regular_minus_edge(int n, int r) {
  if (n < 3 || n > kMaxVertices || r < 2 || r >= n || 2 * r < n) bad("need n/2 <= r < n: " + nr(n, r));
  std::vector<VertexSet> edges;
  for (int i = 1; i < n; ++i) edges.push_back(rotate(VertexSet::interval(0, r), i, n));
  return Hypergraph::make(n, r, std::move(edges));
}

Hypergraph clique_necklace(int k, int r) {
  if (k < 3 || r < 3 || k * r > kMaxVertices) {
    bad("need k >= 3, r >= 3, kr <= 64: k=" + std::to_string(k) + ", r=" + std::to_string(r));
  }
  const int n = k * r;
  std::vector<VertexSet> edges;
  for (int i = 0; i < k; ++i) {
    std::vector<int> block = range(i * r, i * r + r);
    if (i + 1 < k) block.push_back((i + 1) * r);
    else block.insert(block.begin(), 0);
    append_subsets(block, r, edges);
  }
  return Hypergraph::make(n, r, std::move(edges));
}

}  // namespace berge
