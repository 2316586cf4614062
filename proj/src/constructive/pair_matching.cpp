#include "berge/constructive/pair_matching.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "berge/core/error.hpp"
#include "berge/core/matching.hpp"

namespace berge {

std::vector<int> match_pairs_to_edges(const Hypergraph& h, std::span<const std::pair<int, int>> pairs,
                                      std::span<const int> edges) {
  const auto fail = [](const std::string& why) { throw Error(Errc::PreconditionViolated, why); };
  VertexSet cover;
  std::set<int> seen_edges;
  for (int id : edges) {
    if (id < 0 || id >= h.edge_count()) fail("edge id " + std::to_string(id) + " out of range");
    if (!seen_edges.insert(id).second) fail("edge " + std::to_string(id) + " listed twice");
    cover |= h.edge(id);
  }
  const int m = static_cast<int>(edges.size());
  // With two edges U - {u}, U - {u'} the pair {u, u'} fits neither.
  if (m < 3) fail("need at least 3 edges, got " + std::to_string(m));
  if (cover.size() != h.r() + 1) {
    fail("edges cover " + std::to_string(cover.size()) + " vertices, expected " + std::to_string(h.r() + 1));
  }
  if (static_cast<int>(pairs.size()) > m) {
    fail(std::to_string(pairs.size()) + " pairs but only " + std::to_string(m) + " edges");
  }
  std::set<std::pair<int, int>> seen_pairs;
  std::vector<int> load(h.n(), 0);
  for (auto [a, b] : pairs) {
    if (a == b || !cover.contains(a) || !cover.contains(b)) {
      fail("pair {" + std::to_string(a) + "," + std::to_string(b) + "} is not a pair inside the cover");
    }
    if (!seen_pairs.insert(std::minmax(a, b)).second) {
      fail("pair {" + std::to_string(a) + "," + std::to_string(b) + "} repeated");
    }
    for (int v : {a, b}) {
      if (++load[v] > m - 1) fail("vertex " + std::to_string(v) + " lies in too many pairs");
    }
  }
  std::vector<std::vector<int>> candidates;
  for (auto [a, b] : pairs) {
    std::vector<int> c;
    for (int slot = 0; slot < m; ++slot) {
      const VertexSet e = h.edge(edges[slot]);
      if (e.contains(a) && e.contains(b)) c.push_back(slot);
    }
    candidates.push_back(std::move(c));
  }
  const std::vector<int> slots = maximum_matching(candidates, m);
  std::vector<int> out;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (slots[i] < 0) {
      throw Error(Errc::MatchingFailed, "no distinct edge left for pair " + std::to_string(i));
    }
    out.push_back(edges[slots[i]]);
  }
  return out;
}

}  // namespace berge
