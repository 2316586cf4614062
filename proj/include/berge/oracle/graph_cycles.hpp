#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "berge/core/graph.hpp"

namespace berge {

/// Simple cycle u_0 u_1 ... u_{l-1} of exactly `length` vertices, or nullopt.
/// Exact. Throws LengthOutOfRange unless 3 <= length <= n.
std::optional<std::vector<int>> graph_cycle_of_length(const SimpleGraph& g, int length);

/// True iff `cycle` lists distinct vertices forming a cycle of g.
bool is_graph_cycle(const SimpleGraph& g, const std::vector<int>& cycle);

}  // namespace berge
