#include "berge/constructive/compat.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "berge/core/error.hpp"
#include "berge/core/matching.hpp"

namespace berge {

namespace {

std::string pair_str(int u, int v) { return "{" + std::to_string(u) + "," + std::to_string(v) + "}"; }

}  // namespace

CompatGraph::CompatGraph(int n, std::vector<FixedEdge> fixed, std::vector<std::pair<int, int>> free)
    : graph_(n), fixed_(std::move(fixed)), free_(std::move(free)), fixed_at_(n * n, -1) {
  for (const FixedEdge& f : fixed_) {
    graph_.add_edge(f.u, f.v);
    fixed_at_[f.u * n + f.v] = f.edge_id;
    fixed_at_[f.v * n + f.u] = f.edge_id;
  }
  for (auto [u, v] : free_) graph_.add_edge(u, v);
}

int CompatGraph::fixed_edge(int u, int v) const { return fixed_at_[u * n() + v]; }

CompatGraph CompatGraph::make_unchecked(int n, std::vector<FixedEdge> fixed, std::vector<std::pair<int, int>> free) {
  return CompatGraph(n, std::move(fixed), std::move(free));
}

CompatGraph CompatGraph::make(const Hypergraph& h, std::vector<FixedEdge> fixed, std::vector<std::pair<int, int>> free) {
  const auto bad = [](const std::string& why) { throw Error(Errc::InvariantViolated, why); };
  const int n = h.n();
  std::set<std::pair<int, int>> pairs;
  std::vector<bool> used(h.edge_count(), false);
  const auto check_pair = [&](int u, int v) {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) bad("bad pair " + pair_str(u, v));
    if (!pairs.insert(std::minmax(u, v)).second) bad("pair " + pair_str(u, v) + " listed twice");
  };
  for (const FixedEdge& f : fixed) {
    check_pair(f.u, f.v);
    if (f.edge_id < 0 || f.edge_id >= h.edge_count()) bad("fixed image " + std::to_string(f.edge_id) + " out of range");
    if (used[f.edge_id]) bad("edge " + std::to_string(f.edge_id) + " is the image of two fixed edges");
    used[f.edge_id] = true;
    const VertexSet e = h.edge(f.edge_id);
    if (!e.contains(f.u) || !e.contains(f.v)) {
      bad("edge " + std::to_string(f.edge_id) + " does not contain fixed pair " + pair_str(f.u, f.v));
    }
  }
  for (auto [u, v] : free) {
    check_pair(u, v);
    int count = 0;
    for (int id : h.covering(u, v)) count += used[id] ? 0 : 1;
    if (count < h.r()) {
      bad("free pair " + pair_str(u, v) + " has co-degree " + std::to_string(count) + " outside fixed images");
    }
  }
  return CompatGraph(n, std::move(fixed), std::move(free));
}

CompatGraph build_compat_graph(const HamiltonianFrame& frame) {
  const int n = frame.n();
  std::vector<CompatGraph::FixedEdge> fixed;
  std::vector<std::pair<int, int>> free;
  for (int i = 0; i < n; ++i) fixed.push_back({i, mod(i + 1, n), frame.cycle_edge(i)});
  for (int u = 0; u < n; ++u) {
    for (int v = u + 2; v < n; ++v) {
      if (u == 0 && v == n - 1) continue;
      if (frame.extra_codegree(u, v) >= frame.r()) free.emplace_back(u, v);
    }
  }
  return CompatGraph::make(frame.base(), std::move(fixed), std::move(free));
}

std::vector<CompatGraph> compat_augmentations(const HamiltonianFrame& frame, const CompatGraph& g) {
  const int n = frame.n();
  std::vector<CompatGraph> out;
  std::set<std::pair<int, int>> tried;
  for (int t = 0; t < n; ++t) {
    const int t1 = mod(t + 1, n);
    if (frame.extra_codegree(t, t1) < frame.r()) continue;
    if (g.fixed_edge(t, t1) != frame.cycle_edge(t)) continue;
    const VertexSet rest = frame.base().edge(frame.cycle_edge(t)) - VertexSet{t, t1};
    std::vector<std::pair<int, int>> additions;
    for (int h : rest) {
      additions.emplace_back(t, h);
      if (rest.contains(mod(h + 2, n))) additions.emplace_back(h, mod(h + 2, n));
    }
    for (auto [x, y] : additions) {
      if (g.graph().adjacent(x, y)) continue;
      if (!tried.insert({t, x * n + y}).second) continue;
      std::vector<CompatGraph::FixedEdge> fixed;
      for (const auto& f : g.fixed_edges()) {
        if (!(f.edge_id == frame.cycle_edge(t) && std::minmax(f.u, f.v) == std::minmax(t, t1))) fixed.push_back(f);
      }
      fixed.push_back({x, y, frame.cycle_edge(t)});
      std::vector<std::pair<int, int>> free(g.free_edges().begin(), g.free_edges().end());
      free.emplace_back(t, t1);
      try {
        out.push_back(CompatGraph::make(frame.base(), std::move(fixed), std::move(free)));
      } catch (const Error&) {
        // Moving {t, t+1} to the free side broke a co-degree bound; skip.
      }
    }
  }
  return out;
}

BergeCycle lift_graph_cycle(const Hypergraph& h, const CompatGraph& g, const std::vector<int>& cycle) {
  const int len = static_cast<int>(cycle.size());
  if (g.n() != h.n()) throw Error(Errc::PreconditionViolated, "graph and hypergraph sizes differ");
  if (len < 3) throw Error(Errc::PreconditionViolated, "a graph cycle needs at least 3 vertices");
  VertexSet seen;
  for (int v : cycle) {
    if (v < 0 || v >= g.n() || seen.contains(v)) {
      throw Error(Errc::PreconditionViolated, "cycle vertex " + std::to_string(v) + " invalid or repeated");
    }
    seen.insert(v);
  }
  for (int i = 0; i < len; ++i) {
    if (!g.graph().adjacent(cycle[i], cycle[(i + 1) % len])) {
      throw Error(Errc::PreconditionViolated, "pair " + pair_str(cycle[i], cycle[(i + 1) % len]) + " is not an edge");
    }
  }
  BergeCycle out;
  out.vertices = cycle;
  out.edge_ids.assign(len, -1);
  std::vector<bool> taken(h.edge_count(), false);
  for (int i = 0; i < len; ++i) {
    const int id = g.fixed_edge(cycle[i], cycle[(i + 1) % len]);
    if (id < 0) continue;
    if (id >= h.edge_count() || taken[id]) {
      throw Error(Errc::MatchingFailed, "fixed image " + std::to_string(id) + " unusable");
    }
    taken[id] = true;
    out.edge_ids[i] = id;
  }
  std::vector<int> free_slots;
  std::vector<std::vector<int>> candidates;
  for (int i = 0; i < len; ++i) {
    if (out.edge_ids[i] >= 0) continue;
    free_slots.push_back(i);
    std::vector<int> c;
    for (int id : h.covering(cycle[i], cycle[(i + 1) % len])) {
      if (!taken[id]) c.push_back(id);
    }
    candidates.push_back(std::move(c));
  }
  const std::vector<int> match = maximum_matching(candidates, h.edge_count());
  for (std::size_t j = 0; j < free_slots.size(); ++j) {
    const int i = free_slots[j];
    if (match[j] < 0) {
      throw Error(Errc::MatchingFailed, "free pair " + pair_str(cycle[i], cycle[(i + 1) % len]) + " left unmatched");
    }
    out.edge_ids[i] = match[j];
  }
  const CycleValidation check = validate_berge_cycle(h, out);
  if (!check) throw Error(Errc::InvariantViolated, "lifted cycle invalid: " + check.violations.front());
  return out;
}

}  // namespace berge
