#include "berge/constructions/sampling.hpp"

#include <set>
#include <string>
#include <vector>

#include "berge/core/error.hpp"

namespace berge {

namespace {

constexpr int kMaxDraws = 100000;

HamiltonianFrame identity_frame(int n, int r, std::vector<VertexSet> edges) {
  const Hypergraph h = Hypergraph::make(n, r, std::move(edges));
  BergeCycle c;
  for (int i = 0; i < n; ++i) {
    c.vertices.push_back(i);
    c.edge_ids.push_back(i);
  }
  return HamiltonianFrame::from_cycle(h, c);
}

/// Random r-set containing `base`, drawn from `pool`.
VertexSet extend_within(std::mt19937_64& rng, VertexSet base, VertexSet pool, int r) {
  std::vector<int> rest = (pool - base).to_vector();
  VertexSet out = base;
  const int need = r - base.size();
  for (int i = 0; i < need; ++i) {
    const int pick = uniform_int(rng, i, static_cast<int>(rest.size()) - 1);
    std::swap(rest[i], rest[pick]);
    out.insert(rest[i]);
  }
  return out;
}

/// One r-set per pair {i, i+1}, all distinct. A greedy pass can paint itself
/// into a corner when few r-sets exist, so it restarts from scratch.
std::vector<VertexSet> random_cycle_edges(std::mt19937_64& rng, int n, int r, std::set<std::uint64_t>& seen) {
  constexpr int kRestarts = 1000;
  constexpr int kDrawsPerEdge = 200;
  for (int restart = 0; restart < kRestarts; ++restart) {
    std::set<std::uint64_t> taken = seen;
    std::vector<VertexSet> edges;
    for (int i = 0; i < n; ++i) {
      for (int draw = 0; draw < kDrawsPerEdge; ++draw) {
        const VertexSet e = extend_within(rng, VertexSet{i, mod(i + 1, n)}, VertexSet::universe(n), r);
        if (taken.insert(e.bits()).second) {
          edges.push_back(e);
          break;
        }
      }
      if (static_cast<int>(edges.size()) != i + 1) break;
    }
    if (static_cast<int>(edges.size()) == n) {
      seen = std::move(taken);
      return edges;
    }
  }
  throw Error(Errc::BadParameters, "cannot draw distinct cycle edges");
}

void check(int n, int r) {
  if (n < 3 || n > kMaxVertices || r < 2 || r > n - 1) {
    throw Error(Errc::BadParameters, "bad sampling parameters n=" + std::to_string(n) + ", r=" + std::to_string(r));
  }
}

}  // namespace

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span);
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return lo + static_cast<int>(x % span);
}

VertexSet random_r_set(std::mt19937_64& rng, int n, int r) {
  return extend_within(rng, VertexSet{}, VertexSet::universe(n), r);
}

VertexSet random_r_set_with(std::mt19937_64& rng, int n, int r, int v) {
  return extend_within(rng, VertexSet{v}, VertexSet::universe(n), r);
}

std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

HamiltonianFrame random_frame(std::mt19937_64& rng, int n, int r, int extra) {
  check(n, r);
  std::set<std::uint64_t> seen;
  std::vector<VertexSet> edges = random_cycle_edges(rng, n, r, seen);
  for (int added = 0, draw = 0; added < extra; ++draw) {
    if (draw > kMaxDraws) throw Error(Errc::BadParameters, "cannot draw enough distinct extra edges");
    const VertexSet e = random_r_set(rng, n, r);
    if (seen.insert(e.bits()).second) {
      edges.push_back(e);
      ++added;
    }
  }
  return identity_frame(n, r, std::move(edges));
}

HamiltonianFrame random_anchored_frame(std::mt19937_64& rng, int n, int r, int anchor, int count, bool tight) {
  check(n, r);
  std::set<std::uint64_t> seen;
  std::vector<VertexSet> edges = random_cycle_edges(rng, n, r, seen);
  VertexSet pool = VertexSet::universe(n);
  if (tight) {
    pool = rotate(VertexSet::interval(0, std::min(n, r + 2)), anchor, n);
  }
  for (int added = 0, draw = 0; added < count; ++draw) {
    if (draw > kMaxDraws / 10 && pool != VertexSet::universe(n)) pool = VertexSet::universe(n);
    if (draw > kMaxDraws) throw Error(Errc::BadParameters, "cannot draw enough anchored extra edges");
    const VertexSet e = extend_within(rng, VertexSet{anchor}, pool, r);
    if (seen.insert(e.bits()).second) {
      edges.push_back(e);
      ++added;
    }
  }
  return identity_frame(n, r, std::move(edges));
}

HamiltonianFrame random_dense_frame(std::mt19937_64& rng, int n, int r, int per_vertex) {
  check(n, r);
  std::set<std::uint64_t> seen;
  std::vector<VertexSet> edges = random_cycle_edges(rng, n, r, seen);
  std::vector<int> count(n, 0);
  for (int draw = 0;; ++draw) {
    int worst = 0;
    for (int v = 1; v < n; ++v) {
      if (count[v] < count[worst]) worst = v;
    }
    if (count[worst] >= per_vertex) break;
    if (draw > kMaxDraws) throw Error(Errc::BadParameters, "cannot reach the per-vertex extra-edge target");
    const VertexSet e = random_r_set_with(rng, n, r, worst);
    if (seen.insert(e.bits()).second) {
      edges.push_back(e);
      for (int v : e) ++count[v];
    }
  }
  return identity_frame(n, r, std::move(edges));
}

Hypergraph random_hamiltonian_hypergraph(std::mt19937_64& rng, int n, int r, int min_degree) {
  check(n, r);
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  for (int i = n - 1; i > 0; --i) std::swap(order[i], order[uniform_int(rng, 0, i)]);
  std::set<std::uint64_t> seen;
  std::vector<VertexSet> edges;
  std::vector<int> degree(n, 0);
  const auto add = [&](VertexSet e) {
    if (!seen.insert(e.bits()).second) return false;
    edges.push_back(e);
    for (int v : e) ++degree[v];
    return true;
  };
  // Cycle edges in frame labels, then renamed along the random order.
  std::set<std::uint64_t> frame_seen;
  for (VertexSet e : random_cycle_edges(rng, n, r, frame_seen)) {
    VertexSet renamed;
    for (int v : e) renamed.insert(order[v]);
    add(renamed);
  }
  for (int draw = 0;; ++draw) {
    int worst = 0;
    for (int v = 1; v < n; ++v) {
      if (degree[v] < degree[worst]) worst = v;
    }
    if (degree[worst] >= min_degree) break;
    if (draw > kMaxDraws) throw Error(Errc::BadParameters, "cannot reach minimum degree " + std::to_string(min_degree));
    add(random_r_set_with(rng, n, r, worst));
  }
  return Hypergraph::make(n, r, std::move(edges));
}

}  // namespace berge
