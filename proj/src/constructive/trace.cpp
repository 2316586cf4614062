#include "berge/constructive/trace.hpp"

#include <sstream>

namespace berge {

ExtractionTrace extract_lengths(const HamiltonianFrame& frame, const std::vector<int>& lengths,
                                const ExtractOptions& options) {
  ExtractionTrace trace;
  for (int len : lengths) trace.push_back(extract_length(frame, len, options));
  return trace;
}

std::string format_trace_line(const Extraction& x) {
  std::ostringstream out;
  out << x.length << " BRANCH " << branch_name(x.branch) << " WITNESS " << format_witness(x.cycle);
  return out.str();
}

std::string format_trace(const ExtractionTrace& trace) {
  std::string out;
  for (const Extraction& x : trace) out += format_trace_line(x) + '\n';
  return out;
}

int fallback_count(const ExtractionTrace& trace) {
  int count = 0;
  for (const Extraction& x : trace) count += x.branch == Branch::OracleFallback ? 1 : 0;
  return count;
}

}  // namespace berge
