#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "berge/core/hypergraph.hpp"
#include "berge/oracle/berge_cycle.hpp"
#include "berge/oracle/cycle_search.hpp"

namespace berge {

struct SpectrumEntry {
  SearchStatus status = SearchStatus::Unknown;
  std::optional<BergeCycle> witness;
  std::uint64_t nodes = 0;
};

/// Cycle lengths in [lo, hi] classified as present (with witness), absent, or unknown.
struct SpectrumReport {
  int n = 0;
  int lo = 0;
  int hi = 0;
  std::map<int, SpectrumEntry> entries;

  std::set<int> present() const;
  std::set<int> absent() const;
  std::set<int> unknown() const;
  std::uint64_t total_nodes() const;
  /// True iff the report covers [2, n] and every length is present.
  bool is_pancyclic() const;
};

/// Throws LengthOutOfRange unless 2 <= lo <= hi <= n.
SpectrumReport spectrum(const Hypergraph& h, int lo, int hi, const SearchOptions& options = {});

/// One line per length: "l PRESENT <witness>", "l ABSENT" or "l UNKNOWN".
std::string format_spectrum(const SpectrumReport& report);

}  // namespace berge
