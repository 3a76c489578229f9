#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace edgeideal {

/// Vertex label. Nonempty and whitespace-free; vertices are ordered by
/// comparing labels, which fixes the canonical order of every output.
class VertexId {
 public:
  VertexId(std::string label);  // NOLINT(google-explicit-constructor)
  VertexId(std::string_view label) : VertexId(std::string(label)) {}  // NOLINT
  VertexId(const char* label) : VertexId(std::string(label)) {}      // NOLINT

  const std::string& label() const noexcept { return label_; }

  friend auto operator<=>(const VertexId&, const VertexId&) = default;
  friend bool operator==(const VertexId&, const VertexId&) = default;

 private:
  std::string label_;
};

using VertexSet = std::set<VertexId>;

/// Unordered vertex pair stored with `u < v`.
struct Edge {
  VertexId u;
  VertexId v;

  Edge(VertexId a, VertexId b);

  bool contains(const VertexId& w) const { return u == w || v == w; }
  // Endpoint opposite to `w`; `w` must be an endpoint.
  const VertexId& other(const VertexId& w) const { return w == u ? v : u; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

std::string to_string(const Edge& e);
std::string to_string(const VertexSet& s);

/// Finite simple graph. Immutable value: copies share storage and every
/// "edit" returns a new graph. Isolated vertices are allowed.
class Graph {
 public:
  Graph();
  Graph(std::vector<VertexId> vertices, std::vector<Edge> edges);

  /// Vertex set is the endpoints of `edges` plus `isolated`.
  static Graph from_edges(
      std::initializer_list<std::pair<std::string_view, std::string_view>> edges,
      std::initializer_list<std::string_view> isolated = {});
  static Graph from_edges(std::span<const Edge> edges,
                          std::span<const VertexId> isolated = {});

  std::size_t num_vertices() const noexcept;
  std::size_t num_edges() const noexcept;
  bool empty() const noexcept { return num_edges() == 0; }

  /// Sorted by label.
  const std::vector<VertexId>& vertices() const noexcept;
  /// Sorted lexicographically.
  const std::vector<Edge>& edges() const noexcept;

  bool has_vertex(const VertexId& v) const;
  bool has_edge(const VertexId& a, const VertexId& b) const;
  bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }

  /// Position of `v` in `vertices()`; throws InvalidArgument if absent.
  std::size_t index_of(const VertexId& v) const;
  std::optional<std::size_t> find(const VertexId& v) const;

  /// Sorted neighbour labels.
  std::vector<VertexId> neighbors(const VertexId& v) const;
  /// Neighbour indices into `vertices()`, ascending.
  const std::vector<std::size_t>& neighbor_indices(std::size_t i) const;
  std::size_t degree(const VertexId& v) const;

  VertexSet vertex_set() const;
  VertexSet non_isolated_vertices() const;

  Graph induced_subgraph(const VertexSet& keep) const;
  Graph without_vertex(const VertexId& v) const;
  Graph without_edges(std::span<const Edge> remove) const;
  Graph with_edges(std::span<const Edge> add) const;
  Graph with_vertex(const VertexId& v) const;
  /// Drops every isolated vertex; the result is the graph "as an edge set".
  Graph drop_isolated() const;
  Graph relabeled(const std::map<VertexId, VertexId>& mapping) const;

  /// V(h) ⊆ V(this) and E(h) ⊆ E(this).
  bool contains_subgraph(const Graph& h) const;

  /// Vertex sets of connected components, ordered by smallest vertex.
  std::vector<VertexSet> connected_components() const;
  bool is_connected() const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

/// Union of vertex sets and edge sets.
Graph graph_union(const Graph& a, const Graph& b);
/// Edges of `g` not in `h`; vertex set is the endpoints of the remaining edges.
Graph graph_difference(const Graph& g, const Graph& h);

/// Returns `base` if unused in `g`, otherwise `base` followed by the first
/// counter that is free.
VertexId fresh_vertex(const Graph& g, const std::string& base,
                      const VertexSet& also_taken = {});

}  // namespace edgeideal
