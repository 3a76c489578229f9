#include "edgeideal/graph.hpp"

#include <algorithm>
#include <cctype>

#include "edgeideal/error.hpp"

namespace edgeideal {

VertexId::VertexId(std::string label) : label_(std::move(label)) {
  if (label_.empty()) throw InvalidArgument("vertex label must be nonempty");
  for (unsigned char c : label_) {
    if (std::isspace(c)) {
      throw InvalidArgument("vertex label '" + label_ + "' contains whitespace");
    }
  }
}

Edge::Edge(VertexId a, VertexId b) : u(std::move(a)), v(std::move(b)) {
  if (u == v) throw InvalidArgument("loop edge at vertex " + u.label());
  if (v < u) std::swap(u, v);
}

std::string to_string(const Edge& e) { return e.u.label() + e.v.label(); }

std::string to_string(const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& v : s) {
    if (!first) out += ",";
    out += v.label();
    first = false;
  }
  return out + "}";
}

struct Graph::Data {
  std::vector<VertexId> vertices;
  std::vector<Edge> edges;
  std::vector<std::vector<std::size_t>> adjacency;
};

Graph::Graph() : data_(std::make_shared<const Data>()) {}

Graph::Graph(std::vector<VertexId> vertices, std::vector<Edge> edges) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  auto data = std::make_shared<Data>();
  data->adjacency.resize(vertices.size());
  auto locate = [&](const VertexId& v) {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
    if (it == vertices.end() || *it != v) {
      throw InvalidArgument("edge endpoint " + v.label() + " is not a vertex");
    }
    return static_cast<std::size_t>(it - vertices.begin());
  };
  for (const auto& e : edges) {
    std::size_t a = locate(e.u);
    std::size_t b = locate(e.v);
    data->adjacency[a].push_back(b);
    data->adjacency[b].push_back(a);
  }
  for (auto& adj : data->adjacency) std::sort(adj.begin(), adj.end());
  data->vertices = std::move(vertices);
  data->edges = std::move(edges);
  data_ = std::move(data);
}

Graph Graph::from_edges(
    std::initializer_list<std::pair<std::string_view, std::string_view>> edges,
    std::initializer_list<std::string_view> isolated) {
  std::vector<Edge> es;
  std::vector<VertexId> vs;
  for (const auto& [a, b] : edges) {
    es.emplace_back(VertexId(a), VertexId(b));
    vs.emplace_back(a);
    vs.emplace_back(b);
  }
  for (auto v : isolated) vs.emplace_back(v);
  return Graph(std::move(vs), std::move(es));
}

Graph Graph::from_edges(std::span<const Edge> edges,
                        std::span<const VertexId> isolated) {
  std::vector<VertexId> vs(isolated.begin(), isolated.end());
  for (const auto& e : edges) {
    vs.push_back(e.u);
    vs.push_back(e.v);
  }
  return Graph(std::move(vs), std::vector<Edge>(edges.begin(), edges.end()));
}

std::size_t Graph::num_vertices() const noexcept { return data_->vertices.size(); }
std::size_t Graph::num_edges() const noexcept { return data_->edges.size(); }
const std::vector<VertexId>& Graph::vertices() const noexcept { return data_->vertices; }
const std::vector<Edge>& Graph::edges() const noexcept { return data_->edges; }

std::optional<std::size_t> Graph::find(const VertexId& v) const {
  const auto& vs = data_->vertices;
  auto it = std::lower_bound(vs.begin(), vs.end(), v);
  if (it == vs.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - vs.begin());
}

bool Graph::has_vertex(const VertexId& v) const { return find(v).has_value(); }

std::size_t Graph::index_of(const VertexId& v) const {
  auto i = find(v);
  if (!i) throw InvalidArgument("unknown vertex " + v.label());
  return *i;
}

bool Graph::has_edge(const VertexId& a, const VertexId& b) const {
  if (a == b) return false;
  auto ia = find(a);
  auto ib = find(b);
  if (!ia || !ib) return false;
  const auto& adj = data_->adjacency[*ia];
  return std::binary_search(adj.begin(), adj.end(), *ib);
}

std::vector<VertexId> Graph::neighbors(const VertexId& v) const {
  std::vector<VertexId> out;
  for (std::size_t j : data_->adjacency[index_of(v)]) out.push_back(data_->vertices[j]);
  return out;
}

const std::vector<std::size_t>& Graph::neighbor_indices(std::size_t i) const {
  return data_->adjacency.at(i);
}

std::size_t Graph::degree(const VertexId& v) const {
  return data_->adjacency[index_of(v)].size();
}

VertexSet Graph::vertex_set() const {
  return VertexSet(data_->vertices.begin(), data_->vertices.end());
}

VertexSet Graph::non_isolated_vertices() const {
  VertexSet out;
  for (std::size_t i = 0; i < num_vertices(); ++i) {
    if (!data_->adjacency[i].empty()) out.insert(data_->vertices[i]);
  }
  return out;
}

Graph Graph::induced_subgraph(const VertexSet& keep) const {
  std::vector<VertexId> vs;
  for (const auto& v : keep) {
    if (!has_vertex(v)) throw InvalidArgument("unknown vertex " + v.label());
    vs.push_back(v);
  }
  std::vector<Edge> es;
  for (const auto& e : edges()) {
    if (keep.count(e.u) && keep.count(e.v)) es.push_back(e);
  }
  return Graph(std::move(vs), std::move(es));
}

Graph Graph::without_vertex(const VertexId& v) const {
  VertexSet keep = vertex_set();
  if (!keep.erase(v)) throw InvalidArgument("unknown vertex " + v.label());
  return induced_subgraph(keep);
}

Graph Graph::without_edges(std::span<const Edge> remove) const {
  std::set<Edge> drop(remove.begin(), remove.end());
  std::vector<Edge> es;
  for (const auto& e : edges()) {
    if (!drop.count(e)) es.push_back(e);
  }
  return Graph(vertices(), std::move(es));
}

Graph Graph::with_edges(std::span<const Edge> add) const {
  std::vector<Edge> es = edges();
  std::vector<VertexId> vs = vertices();
  for (const auto& e : add) {
    es.push_back(e);
    vs.push_back(e.u);
    vs.push_back(e.v);
  }
  return Graph(std::move(vs), std::move(es));
}

Graph Graph::with_vertex(const VertexId& v) const {
  std::vector<VertexId> vs = vertices();
  vs.push_back(v);
  return Graph(std::move(vs), edges());
}

Graph Graph::drop_isolated() const {
  return from_edges(std::span<const Edge>(edges()));
}

Graph Graph::relabeled(const std::map<VertexId, VertexId>& mapping) const {
  auto image = [&](const VertexId& v) {
    auto it = mapping.find(v);
    return it == mapping.end() ? v : it->second;
  };
  std::vector<VertexId> vs;
  for (const auto& v : vertices()) vs.push_back(image(v));
  std::vector<Edge> es;
  for (const auto& e : edges()) es.emplace_back(image(e.u), image(e.v));
  VertexSet distinct(vs.begin(), vs.end());
  if (distinct.size() != vs.size()) throw InvalidArgument("relabeling is not injective");
  return Graph(std::move(vs), std::move(es));
}

bool Graph::contains_subgraph(const Graph& h) const {
  for (const auto& v : h.vertices()) {
    if (!has_vertex(v)) return false;
  }
  for (const auto& e : h.edges()) {
    if (!has_edge(e)) return false;
  }
  return true;
}

std::vector<VertexSet> Graph::connected_components() const {
  std::vector<VertexSet> out;
  std::vector<bool> seen(num_vertices(), false);
  for (std::size_t s = 0; s < num_vertices(); ++s) {
    if (seen[s]) continue;
    VertexSet comp;
    std::vector<std::size_t> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      comp.insert(data_->vertices[u]);
      for (std::size_t w : data_->adjacency[u]) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

bool Graph::is_connected() const { return connected_components().size() <= 1; }

bool operator==(const Graph& a, const Graph& b) {
  return a.vertices() == b.vertices() && a.edges() == b.edges();
}

Graph graph_union(const Graph& a, const Graph& b) {
  std::vector<VertexId> vs = a.vertices();
  vs.insert(vs.end(), b.vertices().begin(), b.vertices().end());
  std::vector<Edge> es = a.edges();
  es.insert(es.end(), b.edges().begin(), b.edges().end());
  return Graph(std::move(vs), std::move(es));
}

Graph graph_difference(const Graph& g, const Graph& h) {
  std::vector<Edge> es;
  for (const auto& e : g.edges()) {
    if (!h.has_edge(e)) es.push_back(e);
  }
  return Graph::from_edges(std::span<const Edge>(es));
}

VertexId fresh_vertex(const Graph& g, const std::string& base,
                      const VertexSet& also_taken) {
  auto taken = [&](const std::string& s) {
    VertexId v(s);
    return g.has_vertex(v) || also_taken.count(v) > 0;
  };
  if (!taken(base)) return VertexId(base);
  for (std::size_t k = 2;; ++k) {
    std::string candidate = base + std::to_string(k);
    if (!taken(candidate)) return VertexId(candidate);
  }
}

}  // namespace edgeideal
