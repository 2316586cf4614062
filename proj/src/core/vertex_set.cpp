#include "berge/core/vertex_set.hpp"

#include <ostream>

namespace berge {

VertexSet VertexSet::from_vector(const std::vector<int>& vs) {
  VertexSet s;
  for (int v : vs) s.insert(v);
  return s;
}

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  out.reserve(size());
  for (int v : *this) out.push_back(v);
  return out;
}

bool lex_less(VertexSet a, VertexSet b) {
  // Elements below the first difference are a common prefix of both sorted lists.
  if (a == b) return false;
  const int first = (a ^ b).min();
  const VertexSet rest_a = a - VertexSet::interval(0, first + 1);
  const VertexSet rest_b = b - VertexSet::interval(0, first + 1);
  if (a.contains(first)) return !rest_b.empty();
  return rest_a.empty();
}

std::ostream& operator<<(std::ostream& os, VertexSet s) {
  os << '{';
  bool first = true;
  for (int v : s) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  return os << '}';
}

}  // namespace berge
