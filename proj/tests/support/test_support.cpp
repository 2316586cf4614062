#include "test_support.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

#include "berge/constructions/sampling.hpp"
#include "berge/constructive/shift.hpp"
#include "berge/core/thresholds.hpp"

namespace berge::testing {

bool naive_has_berge_cycle(const Hypergraph& h, int length) {
  const int n = h.n();
  const int m = h.edge_count();
  std::vector<int> seq;
  std::vector<bool> used_v(n, false);
  std::vector<bool> used_e(m, false);

  auto contains_pair = [&](int e, int a, int b) {
    VertexSet s = h.edge(e);
    return s.contains(a) && s.contains(b);
  };
  // Edge injection for the pairs of a fixed vertex sequence.
  std::function<bool(int)> assign = [&](int p) -> bool {
    if (p == length) return true;
    int a = seq[p];
    int b = seq[(p + 1) % length];
    for (int e = 0; e < m; ++e) {
      if (used_e[e] || !contains_pair(e, a, b)) continue;
      used_e[e] = true;
      bool ok = assign(p + 1);
      used_e[e] = false;
      if (ok) return true;
    }
    return false;
  };
  std::function<bool()> grow = [&]() -> bool {
    if (static_cast<int>(seq.size()) == length) return assign(0);
    for (int v = seq[0] + 1; v < n; ++v) {
      if (used_v[v]) continue;
      used_v[v] = true;
      seq.push_back(v);
      bool ok = grow();
      seq.pop_back();
      used_v[v] = false;
      if (ok) return true;
    }
    return false;
  };
  for (int s = 0; s < n; ++s) {
    seq = {s};
    used_v.assign(n, false);
    used_v[s] = true;
    if (grow()) return true;
  }
  return false;
}

bool independently_valid(const Hypergraph& h, const std::vector<int>& vertices, const std::vector<int>& edge_ids) {
  const std::size_t len = vertices.size();
  if (len < 2 || edge_ids.size() != len) return false;
  for (std::size_t i = 0; i < len; ++i) {
    if (vertices[i] < 0 || vertices[i] >= h.n()) return false;
    if (edge_ids[i] < 0 || edge_ids[i] >= h.edge_count()) return false;
    for (std::size_t j = 0; j < i; ++j) {
      if (vertices[i] == vertices[j] || edge_ids[i] == edge_ids[j]) return false;
    }
  }
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<int> e = h.edge(edge_ids[i]).to_vector();
    int a = vertices[i];
    int b = vertices[(i + 1) % len];
    if (std::find(e.begin(), e.end(), a) == e.end() || std::find(e.begin(), e.end(), b) == e.end()) return false;
  }
  return true;
}

bool naive_has_graph_cycle(const std::vector<std::vector<bool>>& adj, int length) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> path;
  std::vector<bool> on(n, false);
  std::function<bool()> grow = [&]() -> bool {
    int last = path.back();
    if (static_cast<int>(path.size()) == length) return adj[last][path[0]];
    for (int v = path[0] + 1; v < n; ++v) {
      if (on[v] || !adj[last][v]) continue;
      on[v] = true;
      path.push_back(v);
      bool ok = grow();
      path.pop_back();
      on[v] = false;
      if (ok) return true;
    }
    return false;
  };
  for (int s = 0; s < n; ++s) {
    path = {s};
    on.assign(n, false);
    on[s] = true;
    if (grow()) return true;
  }
  return false;
}

std::vector<std::vector<bool>> incidence_matrix(const Hypergraph& h) {
  const int n = h.n();
  const int total = n + h.edge_count();
  std::vector<std::vector<bool>> adj(total, std::vector<bool>(total, false));
  for (int e = 0; e < h.edge_count(); ++e) {
    for (int v : h.edge(e)) {
      adj[v][n + e] = true;
      adj[n + e][v] = true;
    }
  }
  return adj;
}

std::vector<VertexSet> enumerate_k_ssc(int n, int k) {
  std::vector<VertexSet> out;
  if (n % 2 != 0) return out;
  const int half = n / 2;
  // Subsets of {1..n-1} of size half - 1, joined with {0}.
  const std::uint32_t limit = std::uint32_t{1} << (n - 1);
  for (std::uint32_t rest = 0; rest < limit; ++rest) {
    if (std::popcount(rest) != half - 1) continue;
    VertexSet a = VertexSet::from_bits((std::uint64_t{rest} << 1) | 1U);
    bool ok = true;
    for (int x : a) {
      if (a.contains((x + k) % n)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(a);
  }
  return out;
}

Hypergraph random_hypergraph(std::mt19937_64& rng, int n, int r, int m) {
  m = static_cast<int>(std::min<std::int64_t>(m, binomial(n, r)));
  std::set<VertexSet> seen;
  std::vector<VertexSet> edges;
  while (static_cast<int>(edges.size()) < m) {
    VertexSet e = random_r_set(rng, n, r);
    if (seen.insert(e).second) edges.push_back(e);
  }
  return Hypergraph::make(n, r, edges);
}

HamiltonianFrame frame_from(int n, int r, const std::vector<VertexSet>& cycle_edges,
                            const std::vector<VertexSet>& extras) {
  std::vector<VertexSet> all = cycle_edges;
  all.insert(all.end(), extras.begin(), extras.end());
  Hypergraph h = Hypergraph::make(n, r, all);
  BergeCycle c;
  for (int i = 0; i < n; ++i) {
    c.vertices.push_back(i);
    c.edge_ids.push_back(i);
  }
  return HamiltonianFrame::from_cycle(h, c);
}

namespace {

VertexSet fill_from(std::mt19937_64& rng, VertexSet base, VertexSet pool, int r) {
  std::vector<int> rest = (pool - base).to_vector();
  for (int q = 0; base.size() < r; ++q) {
    int p = uniform_int(rng, q, static_cast<int>(rest.size()) - 1);
    std::swap(rest[q], rest[p]);
    base.insert(rest[q]);
  }
  return base;
}

}  // namespace

std::vector<VertexSet> random_cycle_edges(std::mt19937_64& rng, int n, int r, VertexSet prefer_0) {
  std::set<VertexSet> seen;
  std::vector<VertexSet> edges;
  const VertexSet all = VertexSet::universe(n);
  for (int i = 0; i < n; ++i) {
    VertexSet base{i, (i + 1) % n};
    VertexSet pool = all;
    if (i == 0 && ((prefer_0 | base) - base).size() >= r - 2) pool = prefer_0 | base;
    for (int attempt = 0;; ++attempt) {
      VertexSet e = fill_from(rng, base, attempt < 50 ? pool : all, r);
      if (seen.insert(e).second) {
        edges.push_back(e);
        break;
      }
      if (attempt > 10000) throw std::runtime_error("random_cycle_edges: no fresh edge");
    }
  }
  return edges;
}

std::optional<HamiltonianFrame> ssc_frame(std::mt19937_64& rng, int n, int k) {
  const int r = (n - 2) / 2;
  const int d = std::gcd(n, k);
  if ((n / d) % 2 != 0) return std::nullopt;
  VertexSet a;
  for (int j = 0; j < d; ++j) {
    bool in = j == 0 || uniform_int(rng, 0, 1) == 1;
    for (int x = in ? j : j + d; x < n; x += 2 * d) a.insert(x);
  }
  // Keep e_0 clear of the shift image most of the time so the shift shortcut fails.
  VertexSet avoid = shift_image(a, n - k, n);
  VertexSet prefer = uniform_int(rng, 0, 3) != 0 ? VertexSet::universe(n) - avoid : VertexSet{};
  std::vector<VertexSet> cycle = random_cycle_edges(rng, n, r, prefer);
  std::set<VertexSet> seen(cycle.begin(), cycle.end());

  std::vector<int> drop;
  for (int x : a) {
    if (x != 0) drop.push_back(x);
  }
  for (int i = static_cast<int>(drop.size()) - 1; i > 0; --i) std::swap(drop[i], drop[uniform_int(rng, 0, i)]);
  const int count = uniform_int(rng, 6, static_cast<int>(drop.size()));
  std::vector<VertexSet> extras;
  for (int q = 0; q < count; ++q) {
    VertexSet e = a;
    e.erase(drop[q]);
    if (seen.insert(e).second) extras.push_back(e);
  }
  return frame_from(n, r, cycle, extras);
}

HamiltonianFrame alternating_frame(std::mt19937_64& rng, int n, bool evens, bool odds) {
  const int r = n / 2;
  VertexSet even_set;
  for (int x = 0; x < n; x += 2) even_set.insert(x);
  std::vector<VertexSet> cycle = random_cycle_edges(rng, n, r);
  std::set<VertexSet> seen(cycle.begin(), cycle.end());
  std::vector<VertexSet> extras;
  if (evens && seen.insert(even_set).second) extras.push_back(even_set);
  VertexSet odd_set = rotate(even_set, 1, n);
  if (odds && seen.insert(odd_set).second) extras.push_back(odd_set);
  return frame_from(n, r, cycle, extras);
}

PairInstance random_pair_instance(std::mt19937_64& rng) {
  const int r = uniform_int(rng, 3, 8);
  const int n = uniform_int(rng, r + 2, 16);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[uniform_int(rng, 0, i)]);
  VertexSet u;
  for (int i = 0; i <= r; ++i) u.insert(perm[i]);
  const std::vector<int> uv = u.to_vector();
  const int count = uniform_int(rng, 3, r + 1);
  std::vector<VertexSet> all;
  std::set<VertexSet> seen;
  for (int i = 0; i < 3; ++i) {
    VertexSet pad = random_r_set(rng, n, r);
    if (seen.insert(pad).second) all.push_back(pad);
  }
  std::vector<int> edges;
  for (int q = 0; q < count; ++q) {
    VertexSet e = u;
    e.erase(uv[q]);
    if (seen.insert(e).second) all.push_back(e);
    edges.push_back(static_cast<int>(std::find(all.begin(), all.end(), e) - all.begin()));
  }
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> load(n, 0);
  const int want = uniform_int(rng, 0, count);
  for (int attempt = 0; attempt < 200 && static_cast<int>(pairs.size()) < want; ++attempt) {
    int a = uv[uniform_int(rng, 0, r)];
    int b = uv[uniform_int(rng, 0, r)];
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    if (load[a] >= count - 1 || load[b] >= count - 1) continue;
    if (std::find(pairs.begin(), pairs.end(), std::pair{a, b}) != pairs.end()) continue;
    pairs.emplace_back(a, b);
    ++load[a];
    ++load[b];
  }
  return {Hypergraph::make(n, r, all), edges, pairs};
}

}  // namespace berge::testing
