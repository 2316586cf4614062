#pragma once

#include <optional>
#include <span>

#include "berge/oracle/berge_cycle.hpp"
#include "berge/oracle/frame.hpp"

namespace berge {

struct Chord {
  int i = 0;
  int edge_id = -1;
};

/// First extra edge in `scope` (in the given order) holding some {i, i+k}, smallest i.
/// Non-extra edges in `scope` are skipped. Throws OutOfRange unless 1 <= k <= n - 1.
std::optional<Chord> find_k_chord(const HamiltonianFrame& frame, int k, std::span<const int> scope);
/// Same, over all extra edges.
std::optional<Chord> find_k_chord(const HamiltonianFrame& frame, int k);

/// v_i e_i v_{i+1} ... v_{i+k} f v_i, of length k + 1. Throws NotAChord unless f
/// is an extra edge containing {i, i+k}; OutOfRange unless 1 <= k <= n - 1.
BergeCycle chord_to_cycle(const HamiltonianFrame& frame, int i, int k, int edge_id);

}  // namespace berge
