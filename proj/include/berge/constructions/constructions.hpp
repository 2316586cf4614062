#pragma once

#include "berge/core/hypergraph.hpp"

namespace berge {

/**
 * Two r-uniform cliques: on {0..h-1} and {h-1..n-1} with h = (n+1)/2 for n
 * odd (sharing vertex h-1), on the two halves for n even. With `bridge`
 * (n even only) adds the lexicographically smallest r-set meeting both halves,
 * {0, ..., r-2, n/2}. Requires 2 <= r <= (n-1)/2; BadParameters otherwise.
 */
Hypergraph two_cliques(int n, int r, bool bridge = false);

/**
 * V1 = {0..a-1} with a = (n-1)/2, V2 the rest; every r-set with at most one
 * vertex in V2, in lexicographic order. With `extra` (n even only) adds
 * {0..r-3, a, a+1}. Requires 2 <= r <= (n-1)/2.
 */
Hypergraph split_dominating(int n, int r, bool extra = false);

/// Windows {i, i+1, ..., i+r-1 mod n} for i = 0..n-1. Requires 2 <= r < n.
Hypergraph tight_cycle(int n, int r);

/// tight_cycle(n, r) without the window starting at 0. Requires 2r >= n, 2 <= r < n.
Hypergraph regular_minus_edge(int n, int r);

/**
 * k cliques K_{r+1}^(r) in a ring: clique i spans {ir, ..., ir+r-1, (i+1)r mod n},
 * so hubs sit at 0, r, 2r, ... and n = kr. Requires k >= 3, r >= 3, kr <= 64.
 */
Hypergraph clique_necklace(int k, int r);

}  // namespace berge
