#pragma once

#include <iosfwd>
#include <string>

#include "acyclic/graph.hpp"

namespace acyclic {

/// DIMACS-col edge list: header `p edge <n> <m>`, one `e <u> <v>` line per
/// edge with 1-based endpoints, comment lines starting with `c` ignored.
Graph read_dimacs(std::istream& in);
Graph read_dimacs_file(const std::string& path);

/// Writes edges sorted lexicographically; round-trips bit-exactly through
/// read_dimacs.
void write_dimacs(const Graph& g, std::ostream& out);
void write_dimacs_file(const Graph& g, const std::string& path);

}  // namespace acyclic
