#pragma once

#include <functional>
#include <string>
#include <string_view>

#include "core/graph.hpp"

namespace qx {

// Edge-list text format: one "u v" pair per line, ASCII decimal, whitespace
// separated; lines starting with '#' are comments; an optional "n=<count>"
// header may appear as the first non-comment line. Vertex indices are
// 0-based.
std::string to_edge_list_text(const Graph& g);
Graph from_edge_list_text(std::string_view text);

// graph6 encoding of a labeled graph (de-facto format: 6-bit groups of the
// column-major upper triangle, offset by 63).
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view line);

// Shared by to_graph6 and canonical forms: builds a graph6 line from an
// upper-triangular bitstream accessor.
std::string graph6_from_bitstream(int n, const std::function<int(int)>& bit);

// Reads a graph from a file, sniffing edge-list vs graph6 content.
Graph read_graph_file(const std::string& path);
Graph parse_graph_text(std::string_view text);

}  // namespace qx
