#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "berge/core/hypergraph.hpp"

namespace berge {

// Text format:
//   n m r
//   v_1 v_2 ... v_r        (m lines, strictly increasing indices)
// Lines whose first non-blank character is '#' are comments.

Hypergraph parse_hypergraph(std::string_view text);
Hypergraph read_hypergraph(std::istream& in);
Hypergraph read_hypergraph_file(const std::string& path);

std::string format_hypergraph(const Hypergraph& h);
void write_hypergraph(std::ostream& out, const Hypergraph& h);

}  // namespace berge
