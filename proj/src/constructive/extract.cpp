#include "berge/constructive/extract.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "berge/constructive/chords.hpp"
#include "berge/constructive/compat.hpp"
#include "berge/constructive/pair_matching.hpp"
#include "berge/constructive/shift.hpp"
#include "berge/constructive/ssc.hpp"
#include "berge/core/error.hpp"
#include "berge/oracle/graph_cycles.hpp"

namespace berge {

namespace {

/// Accumulates a cycle step by step: vertex v left through edge e.
class CycleBuilder {
 public:
  void step(int v, int e) {
    c_.vertices.push_back(v);
    c_.edge_ids.push_back(e);
  }
  BergeCycle take() { return std::move(c_); }

 private:
  BergeCycle c_;
};

/// Re-expresses a cycle found in `derived` in the labels of `root`.
Extraction lift_to(const HamiltonianFrame& root, const HamiltonianFrame& derived, const BergeCycle& c, Branch branch,
                   std::string note = {}) {
  Extraction x;
  x.cycle = root.from_input(derived.to_input(c));
  x.length = x.cycle.length();
  x.branch = branch;
  x.note = std::move(note);
  return x;
}

bool valid(const HamiltonianFrame& frame, const BergeCycle& c, int length) {
  return c.length() == length && validate_berge_cycle(frame.base(), c).ok();
}

std::optional<Extraction> try_chord(const HamiltonianFrame& root, const HamiltonianFrame& frame, int k,
                                    std::span<const int> scope, Branch branch = Branch::Chord) {
  const auto chord = find_k_chord(frame, k, scope);
  if (!chord) return std::nullopt;
  return lift_to(root, frame, chord_to_cycle(frame, chord->i, k, chord->edge_id), branch);
}

std::optional<Extraction> try_shift(const HamiltonianFrame& root, const HamiltonianFrame& frame, int s,
                                    std::span<const int> scope, Branch branch = Branch::Shift) {
  const auto trigger = find_shift_trigger(frame, s, scope);
  if (!trigger) return std::nullopt;
  return lift_to(root, frame, shift_lemma_extract(frame, s, trigger->edge_id, trigger->j), branch);
}

std::vector<int> anchors(const HamiltonianFrame& frame, int min_extra) {
  std::vector<int> out;
  for (int v = 0; v < frame.n(); ++v) {
    if (frame.extra_degree(v) >= min_extra) out.push_back(v);
  }
  return out;
}

VertexSet cover_of(const Hypergraph& h, std::span<const int> edges) {
  VertexSet u;
  for (int id : edges) u |= h.edge(id);
  return u;
}

std::vector<int> without(std::span<const int> edges, int drop) {
  std::vector<int> out;
  for (int id : edges) {
    if (id != drop) out.push_back(id);
  }
  return out;
}

std::optional<Extraction> two_cycle(const HamiltonianFrame& frame) {
  const Hypergraph& h = frame.base();
  for (int u = 0; u < h.n(); ++u) {
    for (int v = u + 1; v < h.n(); ++v) {
      const auto cover = h.covering(u, v);
      if (cover.size() >= 2) {
        Extraction x;
        x.length = 2;
        x.branch = Branch::TwoCycle;
        x.cycle.vertices = {u, v};
        x.cycle.edge_ids = {cover[0], cover[1]};
        return x;
      }
    }
  }
  return std::nullopt;
}

// Alternating extra edge e = {0, 2, 4, ...} and an even target length.
std::optional<Extraction> alternating_even(const HamiltonianFrame& root, const HamiltonianFrame& frame, int e,
                                           int length) {
  const int n = frame.n();
  const VertexSet e0 = frame.base().edge(frame.cycle_edge(0));
  for (int j : e0) {
    if (j < 2 || j > n - 2) continue;
    if (j % 2 == 0) {
      for (int a = 0; a < j; a += 2) {
        const int b = length - 2 - a;
        if (b < 0) break;
        if (b % 2 != 0 || b >= n - j) continue;
        CycleBuilder c;
        c.step(0, frame.cycle_edge(0));
        for (int t = j; t > j - a; --t) c.step(t, frame.cycle_edge(t - 1));
        c.step(j - a, e);
        for (int t = n - b; t <= n - 1 && b > 0; ++t) c.step(t, frame.cycle_edge(t));
        return lift_to(root, frame, c.take(), Branch::Case2Even, "j=" + std::to_string(j));
      }
    } else {
      for (int a = 2; a < j; a += 2) {
        const int b = length - 1 - a;
        if (b < 1) break;
        if (b % 2 == 0 || b > n - j) continue;
        CycleBuilder c;
        for (int t = 1; t < a; ++t) c.step(t, frame.cycle_edge(t));
        c.step(a, e);
        for (int t = j + b; t > j; --t) c.step(mod(t, n), frame.cycle_edge(t - 1));
        c.step(j, frame.cycle_edge(0));
        return lift_to(root, frame, c.take(), Branch::Case2Odd, "j=" + std::to_string(j));
      }
    }
  }
  return std::nullopt;
}

std::optional<Extraction> case4_at_anchor(const HamiltonianFrame& root, const HamiltonianFrame& frame, int k) {
  Case4Reduction red = case4_reduce(frame, k);
  if (red.found) {
    red.found->cycle = root.from_input(frame.to_input(red.found->cycle));
    return red.found;
  }
  if (!red.frame) return std::nullopt;
  auto x = case4_endgame(*red.frame, k, red.edges);
  if (!x) return std::nullopt;
  x->cycle = root.from_input(red.frame->to_input(x->cycle));
  return x;
}

std::optional<Extraction> lift_in(const HamiltonianFrame& frame, const CompatGraph& g, int length, std::string note) {
  const auto d = graph_cycle_of_length(g.graph(), length);
  if (!d) return std::nullopt;
  Extraction x;
  x.cycle = lift_graph_cycle(frame.base(), g, *d);
  x.length = length;
  x.branch = Branch::CompatLift;
  x.note = std::move(note);
  return x;
}

}  // namespace

std::string_view branch_name(Branch branch) {
  switch (branch) {
    case Branch::Chord:
      return "CHORD";
    case Branch::Shift:
      return "SHIFT";
    case Branch::Swap:
      return "SWAP";
    case Branch::SscMpd:
      return "SSC_MPD";
    case Branch::SscIntervals:
      return "SSC_INTERVALS";
    case Branch::SscHalf:
      return "SSC_HALF";
    case Branch::Case2Even:
      return "CASE2_EVEN";
    case Branch::Case2Odd:
      return "CASE2_ODD";
    case Branch::CompatLift:
      return "COMPAT_LIFT";
    case Branch::OracleFallback:
      return "ORACLE_FALLBACK";
    case Branch::TrivialN:
      return "TRIVIAL_N";
    case Branch::TwoCycle:
      return "TWO_CYCLE";
  }
  return "?";
}

std::optional<Extraction> case1_extract(const HamiltonianFrame& frame, int length) {
  return try_chord(frame, frame, length - 1, frame.extra_edges());
}

std::optional<Extraction> case2_extract(const HamiltonianFrame& frame, int length) {
  const int n = frame.n();
  const int k = length - 1;
  if (auto x = try_chord(frame, frame, k, frame.extra_edges())) return x;
  for (int e : frame.extra_edges()) {
    const VertexSet set = frame.base().edge(e);
    const VertexSet starts = set & (rotate(set, -1, n) - rotate(set, 1, n));
    if (!starts.empty()) {
      // {i, i+1} in e, i-1 not in e: rotate i to 0, then swap e with e_0.
      const HamiltonianFrame f0 = frame.rotated(starts.min());
      const int old_e0 = f0.cycle_edge(0);
      const HamiltonianFrame swapped = f0.with_swapped_edge(0, e);
      const int one[] = {old_e0};
      if (auto x = try_chord(frame, swapped, k, one, Branch::Swap)) return x;
      const int only[] = {e};
      if (auto x = try_shift(frame, f0, n - k, only)) return x;
    } else if (length % 2 == 0 && (set & rotate(set, -1, n)).empty()) {
      const HamiltonianFrame f0 = frame.rotated(set.min());
      for (const HamiltonianFrame& f : {f0, f0.reflected()}) {
        if (auto x = alternating_even(frame, f, e, length)) return x;
      }
    }
  }
  return std::nullopt;
}

std::optional<Extraction> case3_extract(const HamiltonianFrame& frame, int length) {
  const int n = frame.n();
  const int k = length - 1;
  const int s = n - k;
  for (int v : anchors(frame, 6)) {
    const HamiltonianFrame f0 = frame.rotated(v);
    if (auto x = try_shift(frame, f0, s, f0.extra_at(0))) return x;
    if (auto x = try_chord(frame, f0, k, f0.extra_at(0))) return x;
    const HamiltonianFrame rf = f0.reflected();
    if (auto x = try_shift(frame, rf, s, rf.extra_at(0))) return x;
    for (const HamiltonianFrame& f : {f0, rf}) {
      for (int e : f.extra_at(0)) {
        if (!f.base().edge(e).contains(1)) continue;
        const std::vector<int> rest = without(f.extra_at(0), e);
        const HamiltonianFrame swapped = f.with_swapped_edge(0, e);
        if (auto x = try_shift(frame, swapped, s, rest, Branch::Swap)) return x;
      }
    }
  }
  return std::nullopt;
}

Case4Reduction case4_reduce(const HamiltonianFrame& frame, int k) {
  Case4Reduction out;
  const int n = frame.n();
  const int r = frame.r();
  const int s = n - k;
  if (auto x = try_shift(frame, frame, s, frame.extra_at(0))) {
    out.found = x;
    return out;
  }
  const VertexSet u0 = frame.extra_union_at(0);
  std::vector<int> star(frame.extra_at(0).begin(), frame.extra_at(0).end());
  if (u0.size() >= r + 3) {
    if (u0.size() >= r + 4 || !u0.contains(n - 1)) {
      out.note = "cover of size " + std::to_string(u0.size()) + " without a shift";
      return out;
    }
    if (!u0.contains(1)) {
      const HamiltonianFrame rf = frame.reflected();
      if (auto x = try_shift(frame, rf, s, rf.extra_at(0))) out.found = x;
      else out.note = "reflected shift missing";
      return out;
    }
    int e = -1;
    for (int id : star) {
      if (frame.base().edge(id).contains(1)) {
        e = id;
        break;
      }
    }
    star = without(star, e);
    if (cover_of(frame.base(), star).size() == r + 3) {
      const HamiltonianFrame swapped = frame.with_swapped_edge(0, e);
      if (auto x = try_shift(frame, swapped, s, star, Branch::Swap)) out.found = x;
      else out.note = "swapped shift missing";
      return out;
    }
  }
  if (auto x = try_chord(frame, frame, k, star)) {
    out.found = x;
    return out;
  }
  VertexSet cover = cover_of(frame.base(), star);
  if (cover.size() == r + 2) {
    const VertexSet starts = cover & rotate(cover, -k, n);
    if (starts.size() < 2) {
      out.note = "fewer than two k-pairs in the cover";
      return out;
    }
    auto it = starts.begin();
    const int i = *it;
    const int j = *++it;
    const VertexSet t{i, mod(i + k, n), j, mod(j + k, n)};
    std::vector<int> keep;
    if (t.size() == 3) {
      int middle = -1;
      for (int x : t) {
        if (t.contains(mod(x - k, n)) && t.contains(mod(x + k, n))) middle = x;
      }
      for (int id : star) {
        if (!frame.base().edge(id).contains(middle)) keep.push_back(id);
      }
      out.note = "T=3";
    } else if (t.size() == 2) {
      std::vector<int> with_i;
      std::vector<int> with_ik;
      for (int id : star) {
        const VertexSet e = frame.base().edge(id);
        if (e.contains(i)) with_i.push_back(id);
        else if (e.contains(mod(i + k, n))) with_ik.push_back(id);
        else keep.push_back(id);
      }
      const std::vector<int>& stay = with_i.size() <= with_ik.size() ? with_ik : with_i;
      keep.insert(keep.end(), stay.begin(), stay.end());
      std::sort(keep.begin(), keep.end());
      out.note = "T=2";
    } else {
      out.note = "four k-pair vertices without a chord";
      return out;
    }
    star = std::move(keep);
    cover = cover_of(frame.base(), star);
  }
  if (cover.size() != r + 1 || star.size() < 3) {
    out.note = "reduced family has " + std::to_string(star.size()) + " edges covering " +
               std::to_string(cover.size()) + " vertices";
    return out;
  }
  out.frame = frame;
  out.edges = std::move(star);
  out.cover = cover;
  return out;
}

std::optional<Extraction> case4_endgame(const HamiltonianFrame& frame, int k, const std::vector<int>& edges) {
  const int n = frame.n();
  const Hypergraph& h = frame.base();
  const VertexSet cover = cover_of(h, edges);
  if (cover.size() * 2 != n || !cover.contains(0)) return std::nullopt;
  if (auto x = try_chord(frame, frame, k, edges)) return x;
  if (!is_k_ssc(cover, k, n)) return std::nullopt;
  const SscDecomposition dec = ssc_decompose(cover, k, n);
  const int d = dec.d;
  int m = 1;
  while (!cover.contains(mod(k - m, n))) ++m;
  int p = 1;
  while (!cover.contains(mod(k + p, n))) ++p;
  const int a = mod(k - m, n);
  const int b = mod(k + p, n);
  const int c = mod(-(m - 1), n);
  const auto matched = [&](std::vector<std::pair<int, int>> pairs) -> std::optional<std::vector<int>> {
    try {
      return match_pairs_to_edges(h, pairs, edges);
    } catch (const Error&) {
      return std::nullopt;
    }
  };
  const std::string tag = "d=" + std::to_string(d) + " m=" + std::to_string(m) + " p=" + std::to_string(p);
  if (VertexSet{a, b, c}.size() == 3) {
    if (auto ids = matched({{a, b}, {b, c}})) {
      CycleBuilder cb;
      for (int t = c; t != a; t = mod(t + 1, n)) cb.step(t, frame.cycle_edge(t));
      cb.step(a, (*ids)[0]);
      cb.step(b, (*ids)[1]);
      BergeCycle cyc = cb.take();
      if (valid(frame, cyc, k + 1)) return lift_to(frame, frame, cyc, Branch::SscMpd, tag);
    }
    return std::nullopt;
  }
  if (2 * k != n) {
    if (d < 3) return std::nullopt;
    const VertexSet block = VertexSet::interval(0, d);
    for (int i = 0; i < n; ++i) {
      if (!rotate(block, i, n).is_subset_of(cover) || !rotate(block, i + 2 * d, n).is_subset_of(cover)) continue;
      const int x = mod(i + d - 1, n);
      const int y = mod(i + 2 * d, n);
      const int z = mod(i + 2 * d + 2, n);
      auto ids = matched({{i, x}, {y, z}});
      if (!ids) continue;
      CycleBuilder cb;
      cb.step(i, (*ids)[0]);
      for (int t = x; t != y; t = mod(t + 1, n)) cb.step(t, frame.cycle_edge(t));
      cb.step(y, (*ids)[1]);
      for (int t = z; t != i; t = mod(t + 1, n)) cb.step(t, frame.cycle_edge(t));
      BergeCycle cyc = cb.take();
      if (valid(frame, cyc, k + 1)) return lift_to(frame, frame, cyc, Branch::SscIntervals, tag);
    }
    return std::nullopt;
  }
  // k = n/2: the cover is one interval of k vertices; rotate it onto [0, k-1].
  int start = -1;
  for (int x : cover) {
    if (!cover.contains(mod(x - 1, n))) start = x;
  }
  if (start < 0) return std::nullopt;
  const HamiltonianFrame f1 = frame.rotated(start);
  const VertexSet low = VertexSet::interval(0, k);
  for (const HamiltonianFrame& f : {f1, f1.reflected().rotated(n - k + 1)}) {
    if (cover_of(f.base(), edges) != low) continue;
    for (int j = 1; j <= k - 2; ++j) {
      const VertexSet ej = f.base().edge(f.cycle_edge(j));
      for (int y : ej - low) {
        const int s = y - k;
        for (int t = std::max(0, j - s - 1); t < j; ++t) {
          const int w = t + s + 2;
          if (w > k - 1 || w <= j) continue;
          auto ids = [&]() -> std::optional<std::vector<int>> {
            try {
              return match_pairs_to_edges(f.base(), std::vector<std::pair<int, int>>{{t, w}, {j, 0}}, edges);
            } catch (const Error&) {
              return std::nullopt;
            }
          }();
          if (!ids) continue;
          CycleBuilder cb;
          for (int x = 0; x < t; ++x) cb.step(x, f.cycle_edge(x));
          cb.step(t, (*ids)[0]);
          for (int x = w; x < y; ++x) cb.step(x, f.cycle_edge(x));
          cb.step(y, f.cycle_edge(j));
          cb.step(j, (*ids)[1]);
          BergeCycle cyc = cb.take();
          if (valid(f, cyc, k + 1)) return lift_to(frame, f, cyc, Branch::SscHalf, "j=" + std::to_string(j));
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<Extraction> case4_extract(const HamiltonianFrame& frame, int length) {
  const int k = length - 1;
  for (int v : anchors(frame, 6)) {
    if (auto x = case4_at_anchor(frame, frame.rotated(v), k)) return x;
  }
  return std::nullopt;
}

std::optional<Extraction> mainsmall_extract(const HamiltonianFrame& frame, int length) {
  const CompatGraph g = build_compat_graph(frame);
  if (auto x = lift_in(frame, g, length, {})) return x;
  const std::vector<CompatGraph> variants = compat_augmentations(frame, g);
  for (std::size_t i = 0; i < variants.size(); ++i) {
    if (auto x = lift_in(frame, variants[i], length, "augmented")) return x;
  }
  return std::nullopt;
}

std::optional<Extraction> generic_extract(const HamiltonianFrame& frame, int length) {
  const int n = frame.n();
  const int k = length - 1;
  if (auto x = try_chord(frame, frame, k, frame.extra_edges())) return x;
  for (int t = 0; t < n; ++t) {
    const HamiltonianFrame f0 = frame.rotated(t);
    if (auto x = try_shift(frame, f0, n - k, f0.extra_at(0))) return x;
    const HamiltonianFrame rf = f0.reflected();
    if (auto x = try_shift(frame, rf, n - k, rf.extra_at(0))) return x;
  }
  return std::nullopt;
}

Extraction extract_length(const HamiltonianFrame& frame, int length, const ExtractOptions& options) {
  const int n = frame.n();
  if (length < 2 || length > n) {
    throw Error(Errc::LengthOutOfRange, "length " + std::to_string(length) + " outside 2.." + std::to_string(n));
  }
  const HypothesisReport hyp = check_hypotheses(frame);
  if (!hyp.met && !options.allow_fallback) {
    throw Error(Errc::HypothesesNotMet, std::string(regime_name(hyp.regime)) + ": " + hyp.detail);
  }
  std::optional<Extraction> x;
  if (length == n) {
    x = Extraction{n, Branch::TrivialN, frame.cycle(), {}};
  } else if (length == 2) {
    x = two_cycle(frame);
  } else {
    switch (hyp.regime) {
      case Regime::AboveHalf:
        x = case1_extract(frame, length);
        break;
      case Regime::Half:
        x = case2_extract(frame, length);
        break;
      case Regime::NearHalfOdd:
        x = case3_extract(frame, length);
        break;
      case Regime::NearHalfEven:
        x = case4_extract(frame, length);
        break;
      case Regime::BelowHalf:
        x = mainsmall_extract(frame, length);
        break;
      case Regime::Unsupported:
        break;
    }
    if (!x) x = generic_extract(frame, length);
  }
  if (!x && options.allow_fallback) {
    SearchResult res = find_berge_cycle(frame.base(), length, options.fallback_search);
    if (res.cycle) {
      x = Extraction{length, Branch::OracleFallback, *res.cycle, {}};
    } else {
      throw Error(Errc::ExtractionFailed, "no cycle of length " + std::to_string(length) +
                                              (res.status == SearchStatus::Absent ? " exists" : " found within the cap"));
    }
  }
  if (!x) {
    throw Error(Errc::ExtractionFailed, "no construction produced a cycle of length " + std::to_string(length) + " (" +
                                            std::string(regime_name(hyp.regime)) + ")");
  }
  const CycleValidation check = validate_berge_cycle(frame.base(), x->cycle);
  if (!check || x->cycle.length() != length) {
    throw Error(Errc::InvariantViolated, std::string(branch_name(x->branch)) + " produced an invalid cycle of length " +
                                             std::to_string(length) +
                                             (check ? std::string() : ": " + check.violations.front()));
  }
  return *x;
}

}  // namespace berge
