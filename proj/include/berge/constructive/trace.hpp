#pragma once

#include <string>
#include <vector>

#include "berge/constructive/extract.hpp"

namespace berge {

using ExtractionTrace = std::vector<Extraction>;

/// Extracts every length in `lengths`, in order. Errors propagate.
ExtractionTrace extract_lengths(const HamiltonianFrame& frame, const std::vector<int>& lengths,
                                const ExtractOptions& options = {});

/// "l BRANCH <name> WITNESS <v0 e0 v1 e1 ...>"
std::string format_trace_line(const Extraction& x);
std::string format_trace(const ExtractionTrace& trace);

/// Number of records built by the oracle rather than a construction.
int fallback_count(const ExtractionTrace& trace);

}  // namespace berge
