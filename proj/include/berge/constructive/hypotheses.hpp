#pragma once

#include <string>

#include "berge/oracle/frame.hpp"

namespace berge {

/// Where r sits relative to n, which decides the extraction strategy.
enum class Regime {
  AboveHalf,     // 2r > n
  Half,          // 2r = n
  NearHalfOdd,   // n = 2r + 1
  NearHalfEven,  // n = 2r + 2
  BelowHalf,     // n in {2r + 3, 2r + 4}
  Unsupported,
};

std::string_view regime_name(Regime regime);
Regime classify_regime(int n, int r);

/**
 * Extra-edge requirement per regime: some vertex in >= 1 extra edge when
 * 2r >= n, some vertex in >= 6 when n in {2r+1, 2r+2}, every vertex in
 * >= 5(r-1) + 2 when n in {2r+3, 2r+4}. Returns -1 for Unsupported.
 */
int extra_edge_requirement(Regime regime, int r);
/// True iff the requirement applies to every vertex rather than some vertex.
bool requirement_is_per_vertex(Regime regime);

struct HypothesisReport {
  Regime regime = Regime::Unsupported;
  bool met = false;
  int required = 0;
  /// Best vertex (some-vertex regimes) or worst vertex (per-vertex regime).
  int vertex = -1;
  int count = 0;
  /// Smallest n at which the argument for this regime is complete; 0 if none.
  int size_bound = 0;
  std::string detail;
};

/// Requires r >= 3. Never throws.
HypothesisReport check_hypotheses(const HamiltonianFrame& frame);

}  // namespace berge
