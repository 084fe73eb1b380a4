#pragma once

#include <string>
#include <string_view>

#include "expdom/graph.hpp"

namespace expdom {

enum class GraphFormat { Edge, Graph6 };

/**
 * EDGE: optional '#' comment lines and blank lines; first data line "n m";
 * then m lines "u v". Duplicates and loops are rejected.
 * GRAPH6: standard graph6, optional ">>graph6<<" prefix.
 */
Graph parse_graph(std::string_view text, GraphFormat format);

/// Canonical serialization; EDGE lists edges in lexicographic order, no trailing newline.
std::string emit_graph(const Graph& g, GraphFormat format);

/// Reads a graph from disk; ".g6"/".graph6" selects GRAPH6, anything else EDGE.
Graph read_graph_file(const std::string& path);

/// "0,3,7" -> {0,3,7}. Empty text is the empty set. Checks ids against n.
VertexSet parse_vertex_set(std::string_view text, std::size_t n);
std::string format_vertex_set(const VertexSet& set);

}  // namespace expdom
