#include "berge/oracle/spectrum.hpp"

#include <sstream>

#include "berge/core/error.hpp"

namespace berge {

namespace {

std::set<int> with_status(const SpectrumReport& report, SearchStatus status) {
  std::set<int> out;
  for (const auto& [len, entry] : report.entries) {
    if (entry.status == status) out.insert(len);
  }
  return out;
}

}  // namespace

std::set<int> SpectrumReport::present() const { return with_status(*this, SearchStatus::Found); }
std::set<int> SpectrumReport::absent() const { return with_status(*this, SearchStatus::Absent); }
std::set<int> SpectrumReport::unknown() const { return with_status(*this, SearchStatus::Unknown); }

std::uint64_t SpectrumReport::total_nodes() const {
  std::uint64_t total = 0;
  for (const auto& [len, entry] : entries) total += entry.nodes;
  return total;
}

bool SpectrumReport::is_pancyclic() const {
  if (lo > 2 || hi < n) return false;
  for (int len = 2; len <= n; ++len) {
    auto it = entries.find(len);
    if (it == entries.end() || it->second.status != SearchStatus::Found) return false;
  }
  return true;
}

SpectrumReport spectrum(const Hypergraph& h, int lo, int hi, const SearchOptions& options) {
  if (lo < 2 || hi > h.n() || lo > hi) {
    throw Error(Errc::LengthOutOfRange, "length range [" + std::to_string(lo) + ", " + std::to_string(hi) +
                                            "] not inside [2, " + std::to_string(h.n()) + "]");
  }
  SpectrumReport report;
  report.n = h.n();
  report.lo = lo;
  report.hi = hi;
  for (int len = lo; len <= hi; ++len) {
    SearchResult res = find_berge_cycle(h, len, options);
    report.entries[len] = SpectrumEntry{res.status, std::move(res.cycle), res.nodes};
  }
  return report;
}

std::string format_spectrum(const SpectrumReport& report) {
  std::ostringstream out;
  for (const auto& [len, entry] : report.entries) {
    out << len << ' ';
    switch (entry.status) {
      case SearchStatus::Found:
        out << "PRESENT " << format_witness(*entry.witness);
        break;
      case SearchStatus::Absent:
        out << "ABSENT";
        break;
      case SearchStatus::Unknown:
        out << "UNKNOWN";
        break;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace berge
