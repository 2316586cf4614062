#include "berge/constructive/chords.hpp"

#include <string>

#include "berge/core/error.hpp"

namespace berge {

namespace {

void check_k(const HamiltonianFrame& frame, int k) {
  if (k < 1 || k > frame.n() - 1) {
    throw Error(Errc::OutOfRange, "chord length " + std::to_string(k) + " outside 1.." + std::to_string(frame.n() - 1));
  }
}

}  // namespace

std::optional<Chord> find_k_chord(const HamiltonianFrame& frame, int k, std::span<const int> scope) {
  check_k(frame, k);
  const int n = frame.n();
  for (int id : scope) {
    if (id < 0 || id >= frame.base().edge_count() || !frame.is_extra(id)) continue;
    const VertexSet e = frame.base().edge(id);
    const VertexSet hits = e & rotate(e, -k, n);
    if (!hits.empty()) return Chord{hits.min(), id};
  }
  return std::nullopt;
}

std::optional<Chord> find_k_chord(const HamiltonianFrame& frame, int k) {
  return find_k_chord(frame, k, frame.extra_edges());
}

BergeCycle chord_to_cycle(const HamiltonianFrame& frame, int i, int k, int edge_id) {
  check_k(frame, k);
  const int n = frame.n();
  i = mod(i, n);
  const int j = mod(i + k, n);
  if (edge_id < 0 || edge_id >= frame.base().edge_count() || !frame.is_extra(edge_id)) {
    throw Error(Errc::NotAChord, "edge " + std::to_string(edge_id) + " is not an extra edge");
  }
  const VertexSet f = frame.base().edge(edge_id);
  if (!f.contains(i) || !f.contains(j)) {
    throw Error(Errc::NotAChord, "edge " + std::to_string(edge_id) + " does not contain {" + std::to_string(i) + "," +
                                     std::to_string(j) + "}");
  }
  BergeCycle c;
  for (int t = 0; t < k; ++t) {
    c.vertices.push_back(mod(i + t, n));
    c.edge_ids.push_back(frame.cycle_edge(i + t));
  }
  c.vertices.push_back(j);
  c.edge_ids.push_back(edge_id);
  return c;
}

}  // namespace berge
