#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "edgeideal/graph.hpp"

namespace edgeideal {

/// Cyclic vertex sequence, rotated to start at its smallest vertex and
/// oriented towards the smaller of that vertex's two cycle neighbours.
struct Cycle {
  std::vector<VertexId> vertices;

  std::size_t length() const noexcept { return vertices.size(); }
  std::vector<Edge> edges() const;
  bool contains(const VertexId& v) const;

  friend bool operator==(const Cycle&, const Cycle&) = default;
  friend auto operator<=>(const Cycle&, const Cycle&) = default;
};

/// Builds the canonical form of a cyclic sequence (a closed walk given once).
Cycle make_cycle(std::vector<VertexId> sequence);

enum class BranchKind { OneBranch, TwoBranch };

const char* to_string(BranchKind kind);

/// Maximal connected subgraph at `root` in which `root` is terminal
/// (one-branch) or has degree two on a cycle (two-branch).
struct Branch {
  BranchKind kind;
  VertexId root;
  Graph subgraph;
  /// Neighbours of the root inside the branch (one or two).
  std::vector<VertexId> root_neighbors;
};

std::size_t degree(const Graph& g, const VertexId& v);

/// Edges with at least one endpoint of degree one.
std::vector<Edge> terminal_edges(const Graph& g);
bool is_terminal_vertex(const Graph& g, const VertexId& v);

/// Partition of the edges into maximal 2-connected blocks and bridges. Each
/// block is sorted; blocks are ordered by their first edge.
std::vector<std::vector<Edge>> biconnected_components(const Graph& g);

/// |E| - |V| + #components.
std::size_t cycle_rank(const Graph& g);
bool is_forest(const Graph& g);
bool is_tree(const Graph& g);

/// Every block is a single edge or a cycle.
bool is_cactus(const Graph& g);
/// Cycle blocks of a cactus, sorted. Throws InvalidArgument on a non-cactus.
std::vector<Cycle> cycles(const Graph& g);

/// Branches of a connected cactus at `x`, ordered by their smallest vertex
/// other than `x`.
std::vector<Branch> branches_at(const Graph& g, const VertexId& x);

/// Vertices whose neighbourhood is a clique.
VertexSet simplicial_vertices(const Graph& g);
/// Maximal cliques containing a simplicial vertex, sorted.
std::vector<VertexSet> simplexes(const Graph& g);
bool is_clique(const Graph& g, const VertexSet& s);

/// Chordality via a maximum-cardinality-search elimination ordering.
bool is_chordal(const Graph& g);

/// Whether some (not necessarily induced) cycle of the given length exists.
bool has_cycle_subgraph(const Graph& g, std::size_t length);

/// Chordless cycles of length < k, sorted.
std::vector<Cycle> induced_cycles_shorter_than(const Graph& g, std::size_t k);

/// Calls `visit` once for each simple cycle of the given length; stops early
/// when `visit` returns false.
void for_each_cycle_of_length(const Graph& g, std::size_t length,
                              const std::function<bool(const Cycle&)>& visit);

}  // namespace edgeideal
