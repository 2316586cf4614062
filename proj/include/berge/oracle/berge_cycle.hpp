#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "berge/core/hypergraph.hpp"

namespace berge {

/// v_0 e_0 v_1 e_1 ... v_{l-1} e_{l-1} v_0 with {v_i, v_{i+1}} inside edge e_i.
struct BergeCycle {
  std::vector<int> vertices;
  std::vector<int> edge_ids;

  int length() const { return static_cast<int>(vertices.size()); }
  bool operator==(const BergeCycle&) const = default;
};

struct CycleValidation {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
  explicit operator bool() const { return ok(); }
};

/// Checks every BergeCycle invariant against h; violations are reported, not thrown.
CycleValidation validate_berge_cycle(const Hypergraph& h, const BergeCycle& cycle);

/// "v0 e0 v1 e1 ..."
std::string format_witness(const BergeCycle& cycle);
/// Inverse of format_witness. Throws ParseError.
BergeCycle parse_witness(std::string_view text);

}  // namespace berge
