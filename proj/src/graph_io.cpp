#include "edgeideal/graph_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "edgeideal/error.hpp"

namespace edgeideal {

Graph parse_graph(std::istream& in) {
  std::vector<VertexId> vertices;
  std::vector<Edge> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first) || first.front() == '#') continue;
    std::string second;
    if (!(fields >> second)) {
      vertices.emplace_back(first);
      continue;
    }
    std::string extra;
    if (fields >> extra) throw ParseError(line_no, "expected at most two fields");
    if (first == second) throw ParseError(line_no, "loop edge at vertex " + first);
    edges.emplace_back(VertexId(first), VertexId(second));
    vertices.emplace_back(first);
    vertices.emplace_back(second);
  }
  return Graph(std::move(vertices), std::move(edges));
}

Graph parse_graph_string(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

Graph parse_graph_file(const std::string& path) {
  if (path == "-") return parse_graph(std::cin);
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open graph file " + path);
  return parse_graph(in);
}

std::string serialize_graph(const Graph& g) {
  std::string out;
  for (const auto& e : g.edges()) out += e.u.label() + " " + e.v.label() + "\n";
  for (const auto& v : g.vertices()) {
    if (g.degree(v) == 0) out += v.label() + "\n";
  }
  return out;
}

}  // namespace edgeideal
