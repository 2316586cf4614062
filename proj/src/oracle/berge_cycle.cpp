#include "berge/oracle/berge_cycle.hpp"

#include <set>
#include <sstream>

#include "berge/core/error.hpp"

namespace berge {

CycleValidation validate_berge_cycle(const Hypergraph& h, const BergeCycle& cycle) {
  CycleValidation result;
  auto& out = result.violations;
  const int len = cycle.length();
  if (len < 2) out.push_back("length " + std::to_string(len) + " is below 2");
  if (cycle.edge_ids.size() != cycle.vertices.size()) {
    out.push_back("vertex count " + std::to_string(cycle.vertices.size()) + " differs from edge count " +
                  std::to_string(cycle.edge_ids.size()));
    return result;
  }
  std::set<int> seen_v;
  std::set<int> seen_e;
  bool indices_ok = true;
  for (int i = 0; i < len; ++i) {
    const int v = cycle.vertices[i];
    const int e = cycle.edge_ids[i];
    if (v < 0 || v >= h.n()) {
      out.push_back("vertex " + std::to_string(v) + " out of range");
      indices_ok = false;
    } else if (!seen_v.insert(v).second) {
      out.push_back("duplicate vertex " + std::to_string(v));
    }
    if (e < 0 || e >= h.edge_count()) {
      out.push_back("edge id " + std::to_string(e) + " out of range");
      indices_ok = false;
    } else if (!seen_e.insert(e).second) {
      out.push_back("duplicate edge " + std::to_string(e));
    }
  }
  if (!indices_ok) return result;
  for (int i = 0; i < len; ++i) {
    const int a = cycle.vertices[i];
    const int b = cycle.vertices[(i + 1) % len];
    const VertexSet e = h.edge(cycle.edge_ids[i]);
    if (!e.contains(a) || !e.contains(b)) {
      out.push_back("pair {" + std::to_string(a) + "," + std::to_string(b) + "} not inside edge " +
                    std::to_string(cycle.edge_ids[i]));
    }
  }
  return result;
}

std::string format_witness(const BergeCycle& cycle) {
  std::ostringstream out;
  for (int i = 0; i < cycle.length(); ++i) {
    if (i > 0) out << ' ';
    out << cycle.vertices[i] << ' ' << cycle.edge_ids[i];
  }
  return out.str();
}

BergeCycle parse_witness(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<long long> tokens;
  long long x = 0;
  while (in >> x) tokens.push_back(x);
  in.clear();
  std::string junk;
  if (in >> junk) throw Error(Errc::ParseError, "witness has non-numeric token '" + junk + "'");
  if (tokens.size() % 2 != 0) throw Error(Errc::ParseError, "witness must alternate vertex and edge");
  BergeCycle c;
  for (std::size_t i = 0; i < tokens.size(); i += 2) {
    c.vertices.push_back(static_cast<int>(tokens[i]));
    c.edge_ids.push_back(static_cast<int>(tokens[i + 1]));
  }
  return c;
}

}  // namespace berge
