#pragma once

#include <cstdint>
#include <optional>

#include "berge/core/hypergraph.hpp"
#include "berge/oracle/berge_cycle.hpp"

namespace berge {

enum class SearchStatus { Found, Absent, Unknown };

struct SearchOptions {
  /// Maximum number of node expansions; 0 means unlimited. Exceeding it
  /// yields Unknown, never Absent.
  std::uint64_t node_cap = 0;
  /// Run the pair-to-edge matching check after every `prune_interval` path
  /// extensions (and always before closing the cycle).
  int prune_interval = 1;
};

struct SearchResult {
  SearchStatus status = SearchStatus::Absent;
  std::optional<BergeCycle> cycle;
  std::uint64_t nodes = 0;

  bool found() const { return status == SearchStatus::Found; }
};

/**
 * Exact search for a Berge cycle of the given length.
 *
 * Vertex sequences are grown depth-first from their smallest vertex, smallest
 * neighbour first; each consecutive pair must be matched to its own edge,
 * which is maintained as an incremental bipartite matching (a failed
 * augmentation is a Hall violation and prunes the branch). Throws
 * LengthOutOfRange unless 2 <= length <= n.
 */
SearchResult find_berge_cycle(const Hypergraph& h, int length, const SearchOptions& options = {});

}  // namespace berge
