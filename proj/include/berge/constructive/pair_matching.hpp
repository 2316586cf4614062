#pragma once

#include <span>
#include <utility>
#include <vector>

#include "berge/core/hypergraph.hpp"

namespace berge {

/**
 * Assigns distinct edges from `edges` to vertex pairs, the i-th edge
 * containing the i-th pair.
 *
 * Preconditions (PreconditionViolated): `edges` are distinct ids whose union
 * U has exactly r + 1 vertices; pairs are distinct, each inside U; no vertex
 * lies in more than |edges| - 1 pairs; at most |edges| pairs; at least 3 edges. Under these the
 * assignment always exists; MatchingFailed is reported otherwise.
 */
std::vector<int> match_pairs_to_edges(const Hypergraph& h, std::span<const std::pair<int, int>> pairs,
                                      std::span<const int> edges);

}  // namespace berge
