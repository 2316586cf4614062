#pragma once

#include <optional>
#include <span>
#include <vector>

#include "berge/core/hypergraph.hpp"
#include "berge/oracle/berge_cycle.hpp"
#include "berge/oracle/cycle_search.hpp"

namespace berge {

/**
 * A hypergraph relabeled along a hamiltonian Berge cycle C, so that C visits
 * 0, 1, ..., n-1 and cycle edge e_i covers {i, i+1 mod n}.
 *
 * Edge ids are never renumbered: the base hypergraph has the same edge list
 * as the input, only with vertices renamed. `input_vertex` maps frame labels
 * back to the labels of the hypergraph the frame was first built from, and
 * survives rotations, reflections and edge swaps.
 */
class HamiltonianFrame {
 public:
  /// Relabels h along `cycle`, which must be a hamiltonian Berge cycle of h.
  /// Throws PreconditionViolated otherwise.
  static HamiltonianFrame from_cycle(const Hypergraph& h, const BergeCycle& cycle);

  const Hypergraph& base() const { return base_; }
  int n() const { return base_.n(); }
  int r() const { return base_.r(); }

  int cycle_edge(int i) const { return cycle_edges_[mod(i, n())]; }
  std::span<const int> cycle_edges() const { return cycle_edges_; }
  /// Edges not on C, ascending.
  std::span<const int> extra_edges() const { return extra_edges_; }
  bool is_extra(int edge_id) const { return is_extra_[edge_id]; }

  /// Extra edges containing vertex i, ascending.
  std::span<const int> extra_at(int i) const { return extra_at_[i]; }
  /// Union of the extra edges containing vertex i.
  VertexSet extra_union_at(int i) const { return extra_union_[i]; }
  int extra_degree(int i) const { return static_cast<int>(extra_at_[i].size()); }
  int extra_codegree(int u, int v) const { return extra_codeg_[u * n() + v]; }

  /// The hamiltonian cycle itself, in frame labels.
  BergeCycle cycle() const;

  int input_vertex(int frame_vertex) const { return to_input_[frame_vertex]; }
  int frame_vertex(int input_vertex) const { return from_input_[input_vertex]; }
  BergeCycle to_input(const BergeCycle& c) const;
  BergeCycle from_input(const BergeCycle& c) const;

  /// New label i is old label i + t.
  HamiltonianFrame rotated(int t) const;
  /// New label i is old label -i (the cycle traversed backwards from 0).
  HamiltonianFrame reflected() const;
  /// Replaces cycle edge e_i by an extra edge covering {i, i+1}; e_i becomes extra.
  /// Throws PreconditionViolated if `extra_id` is not a suitable extra edge.
  HamiltonianFrame with_swapped_edge(int i, int extra_id) const;

 private:
  HamiltonianFrame(Hypergraph base, std::vector<int> cycle_edges, std::vector<int> to_input);
  /// Frame whose new label i is the current label perm[i].
  HamiltonianFrame permuted(const std::vector<int>& old_of_new, std::vector<int> cycle_edges) const;

  Hypergraph base_;
  std::vector<int> cycle_edges_;
  std::vector<int> extra_edges_;
  std::vector<bool> is_extra_;
  std::vector<std::vector<int>> extra_at_;
  std::vector<VertexSet> extra_union_;
  std::vector<int> extra_codeg_;
  std::vector<int> to_input_;
  std::vector<int> from_input_;
};

/**
 * Searches for a hamiltonian Berge cycle and returns the frame along it,
 * canonically relabeled: input vertex 0 becomes position 0 and the orientation
 * with the lexicographically smaller vertex sequence is used.
 */
struct FrameSearchResult {
  SearchStatus status = SearchStatus::Absent;
  std::optional<HamiltonianFrame> frame;
  std::uint64_t nodes = 0;
};

FrameSearchResult search_hamiltonian_frame(const Hypergraph& h, const SearchOptions& options = {});
std::optional<HamiltonianFrame> find_hamiltonian_frame(const Hypergraph& h);

}  // namespace berge
