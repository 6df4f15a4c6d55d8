#pragma once

#include <string>
#include <string_view>

#include "dbr/graph.hpp"

namespace dbr {

enum class GraphFormat { Graph6, EdgeList };

// Header-less graph6: N(n) length encoding followed by the upper triangle of
// the adjacency matrix in column-major order, packed big-endian into 6-bit
// chunks offset by 63.
std::string encode_graph6(const Graph& g);
Graph decode_graph6(std::string_view line);

// One "u v" pair per line, 0-based; vertex count inferred as max id + 1.
std::string encode_edge_list(const Graph& g);
Graph decode_edge_list(std::string_view text);

// Reads the first graph in the file.  Extensions .g6/.graph6 select graph6,
// anything else edge list, unless a format is forced.
Graph read_graph_file(const std::string& path);
Graph read_graph_file(const std::string& path, GraphFormat format);
GraphFormat format_from_extension(const std::string& path);

}  // namespace dbr
