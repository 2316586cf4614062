#include "berge/core/hypergraph_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "berge/core/error.hpp"

namespace berge {

namespace {

bool is_skippable(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (c != ' ' && c != '\t' && c != '\r') return false;
  }
  return true;
}

std::vector<long long> read_numbers(const std::string& line, int line_no) {
  std::istringstream in(line);
  std::vector<long long> out;
  long long x = 0;
  while (in >> x) out.push_back(x);
  in.clear();
  std::string junk;
  if (in >> junk) {
    throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": unexpected token '" + junk + "'");
  }
  return out;
}

}  // namespace

Hypergraph read_hypergraph(std::istream& in) {
  std::string line;
  int line_no = 0;
  bool have_header = false;
  long long n = 0, m = 0, r = 0;
  std::vector<std::vector<int>> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_skippable(line)) continue;
    const auto nums = read_numbers(line, line_no);
    if (!have_header) {
      if (nums.size() != 3) {
        throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": header must be 'n m r'");
      }
      n = nums[0], m = nums[1], r = nums[2];
      if (n < 1 || n > kMaxVertices || m < 0 || r < 1) {
        throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": header values out of range");
      }
      have_header = true;
      continue;
    }
    if (static_cast<long long>(edges.size()) == m) {
      throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": more edge lines than m");
    }
    if (static_cast<long long>(nums.size()) != r) {
      throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": expected " + std::to_string(r) +
                                        " vertices, found " + std::to_string(nums.size()));
    }
    std::vector<int> edge;
    for (std::size_t i = 0; i < nums.size(); ++i) {
      if (nums[i] < 0 || nums[i] >= n) {
        throw Error(Errc::VertexOutOfRange, "line " + std::to_string(line_no) + ": vertex " +
                                                std::to_string(nums[i]));
      }
      if (i > 0 && nums[i] <= nums[i - 1]) {
        throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": indices must increase");
      }
      edge.push_back(static_cast<int>(nums[i]));
    }
    edges.push_back(std::move(edge));
  }
  if (!have_header) throw Error(Errc::ParseError, "missing header line");
  if (static_cast<long long>(edges.size()) != m) {
    throw Error(Errc::ParseError, "expected " + std::to_string(m) + " edges, found " +
                                      std::to_string(edges.size()));
  }
  return Hypergraph::make(static_cast<int>(n), static_cast<int>(r), edges);
}

Hypergraph parse_hypergraph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_hypergraph(in);
}

Hypergraph read_hypergraph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path);
  return read_hypergraph(in);
}

void write_hypergraph(std::ostream& out, const Hypergraph& h) {
  out << h.n() << ' ' << h.edge_count() << ' ' << h.r() << '\n';
  for (VertexSet e : h.edges()) {
    bool first = true;
    for (int v : e) {
      if (!first) out << ' ';
      out << v;
      first = false;
    }
    out << '\n';
  }
}

std::string format_hypergraph(const Hypergraph& h) {
  std::ostringstream out;
  write_hypergraph(out, h);
  return out.str();
}

}  // namespace berge
