#pragma once

#include <cstdint>
#include <random>

#include "berge/core/hypergraph.hpp"
#include "berge/oracle/frame.hpp"

namespace berge {

/// Uniform integer in [lo, hi], identical across standard libraries.
int uniform_int(std::mt19937_64& rng, int lo, int hi);

/// Uniform random r-subset of {0..n-1}.
VertexSet random_r_set(std::mt19937_64& rng, int n, int r);
/// Uniform random r-subset of {0..n-1} containing v.
VertexSet random_r_set_with(std::mt19937_64& rng, int n, int r, int v);

/// splitmix64 finalizer, for deriving independent seeds from keys.
std::uint64_t mix_seed(std::uint64_t x);

/**
 * A hamiltonian frame on 0..n-1 whose cycle is the identity order: cycle edge
 * e_i is a random r-set containing {i, i+1}, followed by `extra` further
 * distinct random r-sets. Returns the frame built on the resulting hypergraph.
 */
HamiltonianFrame random_frame(std::mt19937_64& rng, int n, int r, int extra);

/**
 * Like random_frame, but the extra edges all contain `anchor`; at least
 * `count` of them. With `tight` the extras are drawn inside a window of
 * r + 2 cycle-consecutive vertices starting at the anchor when possible.
 */
HamiltonianFrame random_anchored_frame(std::mt19937_64& rng, int n, int r, int anchor, int count, bool tight);

/// Extra edges added until every vertex lies in at least `per_vertex` of them.
HamiltonianFrame random_dense_frame(std::mt19937_64& rng, int n, int r, int per_vertex);

/**
 * Random hamiltonian hypergraph: a random cyclic order with one random r-set
 * per consecutive pair, then random r-sets through a minimum-degree vertex
 * until the minimum degree reaches `min_degree`. Vertex labels are the
 * random order, so the cycle is hidden.
 */
Hypergraph random_hamiltonian_hypergraph(std::mt19937_64& rng, int n, int r, int min_degree);

}  // namespace berge
