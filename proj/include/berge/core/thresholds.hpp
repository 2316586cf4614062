#pragma once

#include <cstdint>

namespace berge {

/// Exact binomial coefficient; 0 when k < 0 or k > n.
std::int64_t binomial(int n, int k);

/// Minimum-degree bar for pancyclicity: binom(floor((n-1)/2), r-1) + 1 when
/// r <= floor((n-1)/2), and r when r >= n/2. Requires 3 <= r < n.
std::int64_t degree_threshold(int n, int r);

}  // namespace berge
