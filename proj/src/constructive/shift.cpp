#include "berge/constructive/shift.hpp"

#include <string>

#include "berge/core/error.hpp"

namespace berge {

int shift_map(int i, int s, int n) {
  if (n < 1 || i < 0 || i >= n || s < 0 || s >= n) {
    throw Error(Errc::OutOfRange, "shift_map(" + std::to_string(i) + ", " + std::to_string(s) + ") outside 0.." +
                                      std::to_string(n - 1));
  }
  return i + s <= n - 1 ? i + s : (i + s + 1) % n;
}

VertexSet shift_set(VertexSet a, int s, int n) { return rotate(a, s, n); }

VertexSet shift_image(VertexSet a, int s, int n) {
  VertexSet out;
  for (int i : a) out.insert(shift_map(i, s, n));
  return out;
}

std::optional<ShiftTrigger> find_shift_trigger(const HamiltonianFrame& frame, int s, std::span<const int> scope) {
  const int n = frame.n();
  if (s < 1 || s > n - 2) return std::nullopt;
  const VertexSet e0 = frame.base().edge(frame.cycle_edge(0));
  for (int id : scope) {
    if (!frame.is_extra(id)) continue;
    const VertexSet f = frame.base().edge(id);
    if (!f.contains(0)) continue;
    for (int j : f) {
      if (e0.contains(shift_map(j, s, n))) return ShiftTrigger{id, j};
    }
  }
  return std::nullopt;
}

std::optional<ShiftTrigger> find_shift_trigger(const HamiltonianFrame& frame, int s) {
  return find_shift_trigger(frame, s, frame.extra_at(0));
}

BergeCycle shift_lemma_extract(const HamiltonianFrame& frame, int s, int edge_id, int j) {
  const int n = frame.n();
  if (s < 1 || s > n - 2) {
    throw Error(Errc::PreconditionViolated, "shift constant " + std::to_string(s) + " outside 1.." + std::to_string(n - 2));
  }
  if (edge_id < 0 || edge_id >= frame.base().edge_count() || !frame.is_extra(edge_id)) {
    throw Error(Errc::PreconditionViolated, "edge " + std::to_string(edge_id) + " is not an extra edge");
  }
  const VertexSet f = frame.base().edge(edge_id);
  if (!f.contains(0) || !f.contains(j)) {
    throw Error(Errc::PreconditionViolated,
                "edge " + std::to_string(edge_id) + " must contain 0 and " + std::to_string(j));
  }
  const int i = shift_map(j, s, n);
  if (!frame.base().edge(frame.cycle_edge(0)).contains(i)) {
    throw Error(Errc::PreconditionViolated, "shifted vertex " + std::to_string(i) + " is not in e_0");
  }
  BergeCycle c;
  auto step = [&](int v, int e) {
    c.vertices.push_back(v);
    c.edge_ids.push_back(e);
  };
  if (j + s <= n - 1) {
    if (j == 0) {
      step(0, frame.cycle_edge(0));
    } else {
      step(0, edge_id);
      for (int t = j; t >= 1; --t) step(t, frame.cycle_edge(t - 1));
    }
    for (int t = i; t <= n - 1; ++t) step(t, frame.cycle_edge(t));
  } else {
    step(0, frame.cycle_edge(0));
    for (int t = i; t < j; ++t) step(t, frame.cycle_edge(t));
    step(j, edge_id);
  }
  return c;
}

}  // namespace berge
