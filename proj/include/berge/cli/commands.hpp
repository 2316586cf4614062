#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace berge::cli {

/// Grid of sweep cells: n x r offset x minimum-degree offset.
struct SweepConfig {
  int n_lo = 0;
  int n_hi = 0;
  /// r = floor((n-1)/2) + offset; cells with r outside [3, n-1] are skipped.
  std::vector<int> r_offsets{0};
  /// Target minimum degree = degree_threshold(n, r) + offset.
  std::vector<int> delta_offsets{0};
  int samples = 0;
  std::uint64_t seed = 1;
  /// Node cap per oracle call; 0 = unlimited.
  std::uint64_t cap = 0;
};

/// Header line plus one tab-separated row per cell, in (n, r offset, delta offset) order.
std::string sweep_table(const SweepConfig& config);

/// "a..b", "a..n", "n", or a comma-separated list of those; sorted, duplicates removed.
/// Throws ParseError or LengthOutOfRange.
std::vector<int> parse_lengths(const std::string& text, int n);

/// Parses "a..b" or a single integer into an inclusive range. Throws ParseError.
std::pair<int, int> parse_range(const std::string& text);

/// Runs the command line; returns the process exit code (0 ok, 1 usage, 2 failure).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace berge::cli
