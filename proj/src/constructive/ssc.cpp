#include "berge/constructive/ssc.hpp"

#include <numeric>
#include <string>

#include "berge/core/error.hpp"

namespace berge {

namespace {

void check_modulus(int k, int n) {
  if (n < 2 || n > kMaxVertices || k < 1 || k > n - 1) {
    throw Error(Errc::OutOfRange, "shift " + std::to_string(k) + " modulo " + std::to_string(n) + " out of range");
  }
}

std::string describe(VertexSet a, int k, int n) {
  std::string s = "{";
  bool first = true;
  for (int v : a) {
    if (!first) s += ",";
    s += std::to_string(v);
    first = false;
  }
  return s + "} with k=" + std::to_string(k) + ", n=" + std::to_string(n);
}

}  // namespace

bool is_k_ssc(VertexSet a, int k, int n) {
  if (n < 1 || n > kMaxVertices || n % 2 != 0) return false;
  if (!a.is_subset_of(VertexSet::universe(n))) return false;
  return a.size() == n / 2 && !a.intersects(rotate(a, k, n));
}

VertexSet cyclic_subgroup(int g, int n) {
  VertexSet out;
  int x = 0;
  do {
    out.insert(x);
    x = mod(x + g, n);
  } while (x != 0);
  return out;
}

SscDecomposition ssc_decompose(VertexSet a, int k, int n) {
  check_modulus(k, n);
  if (!is_k_ssc(a, k, n)) throw Error(Errc::NotSsc, describe(a, k, n) + " is not k-SSC");
  if (!a.contains(0)) throw Error(Errc::NotSsc, describe(a, k, n) + " does not contain 0");
  SscDecomposition out;
  out.n = n;
  out.k = k;
  out.a = a;
  out.d = std::gcd(n, k);
  const int d = out.d;
  if ((n / d) % 2 != 0) throw Error(Errc::InvariantViolated, "n/d is odd for " + describe(a, k, n));
  if (a.intersects(rotate(a, d, n))) throw Error(Errc::InvariantViolated, "(d+A) meets A for " + describe(a, k, n));
  const VertexSet even_multiples = cyclic_subgroup(2 * d, n);
  VertexSet covered;
  for (int j = 0; j < d; ++j) {
    const VertexSet block = rotate(even_multiples, a.contains(j) ? j : j + d, n);
    if (!block.is_subset_of(a) || block.intersects(covered)) {
      throw Error(Errc::InvariantViolated, "block " + std::to_string(j) + " does not fit " + describe(a, k, n));
    }
    covered |= block;
    out.blocks.push_back(block);
  }
  if (covered != a) throw Error(Errc::InvariantViolated, "blocks do not cover " + describe(a, k, n));
  return out;
}

SscDecomposition ssc_decompose_rotated(VertexSet a, int k, int n) {
  check_modulus(k, n);
  if (a.empty()) throw Error(Errc::NotSsc, "empty set is not k-SSC");
  const int m = a.min();
  SscDecomposition out = ssc_decompose(rotate(a, -m, n), k, n);
  out.a = a;
  for (VertexSet& b : out.blocks) b = rotate(b, m, n);
  return out;
}

}  // namespace berge
