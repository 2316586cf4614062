#pragma once

#include <vector>

#include "berge/core/vertex_set.hpp"

namespace berge {

/// |A| = n/2 and A is disjoint from k + A (mod n).
bool is_k_ssc(VertexSet a, int k, int n);

/**
 * Coset structure of a k-SSC set A with 0 in A: d = gcd(n, k), n/d even,
 * (d + A) disjoint from A, and A split into d blocks, block j being
 * j + <2d> if j is in A and (j + d) + <2d> otherwise.
 */
struct SscDecomposition {
  int n = 0;
  int k = 0;
  int d = 0;
  VertexSet a;
  std::vector<VertexSet> blocks;
};

/// Throws NotSsc if A is not k-SSC or 0 is not in A, OutOfRange for bad n or k,
/// InvariantViolated if a structural property fails to hold.
SscDecomposition ssc_decompose(VertexSet a, int k, int n);

/// Decomposes A - min(A), then rotates the blocks (and `a`) back by min(A).
SscDecomposition ssc_decompose_rotated(VertexSet a, int k, int n);

/// The subgroup <g> of Z/nZ.
VertexSet cyclic_subgroup(int g, int n);

}  // namespace berge
