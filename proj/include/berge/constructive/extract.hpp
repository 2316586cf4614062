#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "berge/constructive/hypotheses.hpp"
#include "berge/oracle/berge_cycle.hpp"
#include "berge/oracle/cycle_search.hpp"
#include "berge/oracle/frame.hpp"

namespace berge {

enum class Branch {
  Chord,
  Shift,
  Swap,
  SscMpd,
  SscIntervals,
  SscHalf,
  Case2Even,
  Case2Odd,
  CompatLift,
  OracleFallback,
  TrivialN,
  TwoCycle,
};

/// Fixed upper-case names: CHORD, SHIFT, SWAP, SSC_MPD, ...
std::string_view branch_name(Branch branch);

/// A cycle in the labels of the frame passed to the extractor, and how it was built.
struct Extraction {
  int length = 0;
  Branch branch = Branch::Chord;
  BergeCycle cycle;
  std::string note;
};

struct ExtractOptions {
  /// Use the exact oracle when no constructive branch fires, and skip the
  /// hypothesis check.
  bool allow_fallback = false;
  SearchOptions fallback_search{};
};

/**
 * Berge cycle of the requested length, built by the constructive branch
 * matching the frame's regime. Throws LengthOutOfRange unless 2 <= length <= n,
 * HypothesesNotMet when the frame is below its regime's extra-edge bar (unless
 * fallback is allowed), ExtractionFailed when nothing produced a cycle.
 */
Extraction extract_length(const HamiltonianFrame& frame, int length, const ExtractOptions& options = {});

// Per-regime procedures. Each returns nullopt when none of its constructions
// applies; they never fall back to search. `length` is in [3, n-1].

/// 2r > n: a chord of length - 1 in some extra edge.
std::optional<Extraction> case1_extract(const HamiltonianFrame& frame, int length);
/// 2r = n: chords, the e/e_0 swap and shift for edges with consecutive
/// vertices, and the even/odd constructions for alternating edges.
std::optional<Extraction> case2_extract(const HamiltonianFrame& frame, int length);
/// n = 2r + 1, around every vertex in >= 6 extra edges.
std::optional<Extraction> case3_extract(const HamiltonianFrame& frame, int length);
/// n = 2r + 2, around every vertex in >= 6 extra edges.
std::optional<Extraction> case4_extract(const HamiltonianFrame& frame, int length);
/// n in {2r+3, 2r+4}: compatible-graph cycles and their augmentations.
std::optional<Extraction> mainsmall_extract(const HamiltonianFrame& frame, int length);

/// Outcome of reducing the extra edges at vertex 0 to a family covering r + 1 vertices.
struct Case4Reduction {
  /// Set when a cycle turned up on the way.
  std::optional<Extraction> found;
  /// Frame the reduced family lives in (possibly reflected).
  std::optional<HamiltonianFrame> frame;
  std::vector<int> edges;
  VertexSet cover;
  std::string note;
};

/// n = 2r + 2, anchor 0, target k + 1. Empty `frame` and `found` means the reduction got stuck.
Case4Reduction case4_reduce(const HamiltonianFrame& frame, int k);
/// Builds the k + 1 cycle from a reduced family whose cover is k-SSC.
std::optional<Extraction> case4_endgame(const HamiltonianFrame& frame, int k, const std::vector<int>& edges);

/// Chords in every extra edge, then the shift construction around every vertex
/// in both orientations.
std::optional<Extraction> generic_extract(const HamiltonianFrame& frame, int length);

}  // namespace berge
