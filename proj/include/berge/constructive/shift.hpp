#pragma once

#include <optional>
#include <span>

#include "berge/core/vertex_set.hpp"
#include "berge/oracle/berge_cycle.hpp"
#include "berge/oracle/frame.hpp"

namespace berge {

/// i + s if i + s <= n - 1, else i + s + 1 (mod n). Throws OutOfRange unless 0 <= i, s <= n - 1.
int shift_map(int i, int s, int n);

/// {(a + s) mod n : a in A}
VertexSet shift_set(VertexSet a, int s, int n);

/// {shift_map(a, s, n) : a in A}
VertexSet shift_image(VertexSet a, int s, int n);

/// Extra edge f through vertex 0 and a vertex j of f whose shift lands in e_0.
struct ShiftTrigger {
  int edge_id = -1;
  int j = 0;
};

/**
 * Smallest (edge, j) with edge in `scope`, edge an extra edge containing 0,
 * j in edge and shift_map(j, s) in e_0. Edges of `scope` that are not extra
 * edges through 0 are skipped.
 */
std::optional<ShiftTrigger> find_shift_trigger(const HamiltonianFrame& frame, int s, std::span<const int> scope);
/// Same, scanning every extra edge through 0.
std::optional<ShiftTrigger> find_shift_trigger(const HamiltonianFrame& frame, int s);

/**
 * Berge cycle of length n - s + 1 from a shift trigger: with i = shift_map(j, s),
 * either v_0 f v_j e_{j-1} ... v_1 e_0 v_i e_i ... v_{n-1} e_{n-1} v_0 (i = j + s)
 * or v_0 e_0 v_i e_i ... v_j f v_0 (i = j + s + 1 - n). Frame labels.
 * Throws PreconditionViolated unless 1 <= s <= n - 2, f is an extra edge
 * containing 0 and j, and shift_map(j, s) is in e_0.
 */
BergeCycle shift_lemma_extract(const HamiltonianFrame& frame, int s, int edge_id, int j);

}  // namespace berge
