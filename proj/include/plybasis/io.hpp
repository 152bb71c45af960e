#pragma once

#include <string>
#include <string_view>

#include "plybasis/cycle_space.hpp"
#include "plybasis/graph.hpp"
#include "plybasis/path_decomposition.hpp"

namespace plybasis {

// Text formats. Vertex labels are 1-based in files and 0-based in memory.
// Lines starting with 'c' are comments everywhere.
//
//   graph          optional "p edge <n> <m>" header, then "e <u> <v>" lines.
//                  Without a header n is the largest label seen.
//   decomposition  one bag per line, labels separated by spaces;
//                  an empty line is an empty bag.
//   basis          one element per line as 0-based edge ids (graph input order).
//
// Malformed input throws ParseError carrying the 1-based line number.

Graph parse_graph(std::string_view text);

/// Canonical form: header line, then edges with u < v in sorted order.
std::string emit_graph(const Graph& g);

PathDecomposition parse_decomposition(std::string_view text, int vertex_count);
std::string emit_decomposition(const PathDecomposition& d);

GeneratingSet parse_basis(std::string_view text, int edge_count);
std::string emit_basis(const GeneratingSet& basis);

/// Whole file as a string; throws UsageError if it cannot be read.
std::string read_text_file(const std::string& path);

}  // namespace plybasis
