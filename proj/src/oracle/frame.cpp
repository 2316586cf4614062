#include "berge/oracle/frame.hpp"

#include <string>

#include "berge/core/error.hpp"

namespace berge {

HamiltonianFrame::HamiltonianFrame(Hypergraph base, std::vector<int> cycle_edges, std::vector<int> to_input)
    : base_(std::move(base)), cycle_edges_(std::move(cycle_edges)), to_input_(std::move(to_input)) {
  const int n = base_.n();
  is_extra_.assign(base_.edge_count(), true);
  for (int id : cycle_edges_) is_extra_[id] = false;
  for (int id = 0; id < base_.edge_count(); ++id) {
    if (is_extra_[id]) extra_edges_.push_back(id);
  }
  extra_at_.assign(n, {});
  extra_union_.assign(n, {});
  extra_codeg_.assign(n * n, 0);
  for (int id : extra_edges_) {
    const VertexSet e = base_.edge(id);
    for (int u : e) {
      extra_at_[u].push_back(id);
      extra_union_[u] |= e;
      for (int v : e) {
        if (u != v) ++extra_codeg_[u * n + v];
      }
    }
  }
  from_input_.assign(n, 0);
  for (int i = 0; i < n; ++i) from_input_[to_input_[i]] = i;
}

HamiltonianFrame HamiltonianFrame::from_cycle(const Hypergraph& h, const BergeCycle& cycle) {
  if (cycle.length() != h.n()) {
    throw Error(Errc::PreconditionViolated, "cycle of length " + std::to_string(cycle.length()) +
                                                " is not hamiltonian on " + std::to_string(h.n()) + " vertices");
  }
  const CycleValidation check = validate_berge_cycle(h, cycle);
  if (!check) throw Error(Errc::PreconditionViolated, "not a Berge cycle: " + check.violations.front());
  std::vector<int> new_label(h.n());
  for (int i = 0; i < h.n(); ++i) new_label[cycle.vertices[i]] = i;
  return HamiltonianFrame(h.relabeled(new_label), cycle.edge_ids, cycle.vertices);
}

BergeCycle HamiltonianFrame::cycle() const {
  BergeCycle c;
  for (int i = 0; i < n(); ++i) c.vertices.push_back(i);
  c.edge_ids = cycle_edges_;
  return c;
}

BergeCycle HamiltonianFrame::to_input(const BergeCycle& c) const {
  BergeCycle out = c;
  for (int& v : out.vertices) v = to_input_[v];
  return out;
}

BergeCycle HamiltonianFrame::from_input(const BergeCycle& c) const {
  BergeCycle out = c;
  for (int& v : out.vertices) v = from_input_[v];
  return out;
}

HamiltonianFrame HamiltonianFrame::permuted(const std::vector<int>& old_of_new, std::vector<int> cycle_edges) const {
  const int n = this->n();
  std::vector<int> new_label(n);
  std::vector<int> to_input(n);
  for (int i = 0; i < n; ++i) {
    new_label[old_of_new[i]] = i;
    to_input[i] = to_input_[old_of_new[i]];
  }
  return HamiltonianFrame(base_.relabeled(new_label), std::move(cycle_edges), std::move(to_input));
}

HamiltonianFrame HamiltonianFrame::rotated(int t) const {
  const int n = this->n();
  std::vector<int> old_of_new(n);
  std::vector<int> edges(n);
  for (int i = 0; i < n; ++i) {
    old_of_new[i] = mod(i + t, n);
    edges[i] = cycle_edges_[mod(i + t, n)];
  }
  return permuted(old_of_new, std::move(edges));
}

HamiltonianFrame HamiltonianFrame::reflected() const {
  const int n = this->n();
  std::vector<int> old_of_new(n);
  std::vector<int> edges(n);
  for (int i = 0; i < n; ++i) {
    old_of_new[i] = mod(-i, n);
    edges[i] = cycle_edges_[mod(-i - 1, n)];
  }
  return permuted(old_of_new, std::move(edges));
}

HamiltonianFrame HamiltonianFrame::with_swapped_edge(int i, int extra_id) const {
  i = mod(i, n());
  if (extra_id < 0 || extra_id >= base_.edge_count() || !is_extra_[extra_id]) {
    throw Error(Errc::PreconditionViolated, "edge " + std::to_string(extra_id) + " is not an extra edge");
  }
  const VertexSet e = base_.edge(extra_id);
  if (!e.contains(i) || !e.contains(mod(i + 1, n()))) {
    throw Error(Errc::PreconditionViolated,
                "edge " + std::to_string(extra_id) + " does not cover {" + std::to_string(i) + "," +
                    std::to_string(mod(i + 1, n())) + "}");
  }
  std::vector<int> edges = cycle_edges_;
  edges[i] = extra_id;
  return HamiltonianFrame(base_, std::move(edges), to_input_);
}

FrameSearchResult search_hamiltonian_frame(const Hypergraph& h, const SearchOptions& options) {
  FrameSearchResult out;
  SearchResult res = find_berge_cycle(h, h.n(), options);
  out.status = res.status;
  out.nodes = res.nodes;
  if (res.cycle) out.frame = HamiltonianFrame::from_cycle(h, *res.cycle);
  return out;
}

std::optional<HamiltonianFrame> find_hamiltonian_frame(const Hypergraph& h) {
  if (h.n() < 2) return std::nullopt;
  return search_hamiltonian_frame(h).frame;
}

}  // namespace berge
