#pragma once

#include <istream>
#include <string>

#include "edgeideal/graph.hpp"

namespace edgeideal {

// Edge-list text format: one "u v" pair per line, a lone "v" declares a
// vertex, '#' starts a comment line, blank lines are ignored.
Graph parse_graph(std::istream& in);
Graph parse_graph_string(const std::string& text);
// "-" reads standard input.
Graph parse_graph_file(const std::string& path);

// Canonical text: sorted edges, then isolated vertices one per line.
std::string serialize_graph(const Graph& g);

}  // namespace edgeideal
