#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "edgeideal/graph.hpp"

namespace edgeideal {

/// Erdős–Rényi graph on vertices v1..vn (isolated vertices kept).
Graph random_graph(std::mt19937_64& rng, std::size_t n, double p);

/// Connected cactus with between 2 and `max_vertices` vertices, grown by
/// gluing pendant edges and cycles of length 3..6 onto existing vertices.
Graph random_cactus(std::mt19937_64& rng, std::size_t max_vertices);

/// Same graph under a random bijection onto fresh random labels.
Graph random_relabel(std::mt19937_64& rng, const Graph& g);

/// Path, cycle and complete graph on x1..xn.
Graph path_graph(std::size_t n, const std::string& prefix = "x");
Graph cycle_graph(std::size_t n, const std::string& prefix = "x");
Graph complete_graph(std::size_t n, const std::string& prefix = "x");

/// Compact adjacency form used by exhaustive enumeration: vertex i is
/// adjacent to j iff bit j of rows[i] is set. At most 11 vertices.
struct SmallGraph {
  std::size_t n = 0;
  std::vector<std::uint32_t> rows;

  Graph to_graph(const std::string& prefix = "v") const;
  static SmallGraph from_graph(const Graph& g);
};

/// Isomorphism-invariant code: the lexicographically smallest upper-triangle
/// adjacency bitstring over orderings compatible with colour refinement.
std::uint64_t canonical_code(const SmallGraph& g);

/// Predicate assumed closed under taking induced subgraphs.
using HereditaryFilter = std::function<bool(const SmallGraph&)>;

/// All connected graphs on 1..max_n vertices up to isomorphism that satisfy
/// `keep`, grouped by vertex count (index = vertex count). Growth adds one
/// vertex at a time, which is complete for hereditary predicates because
/// every connected graph has a vertex whose removal leaves it connected.
std::vector<std::vector<SmallGraph>> connected_graphs_up_to(std::size_t max_n,
                                                            const HereditaryFilter& keep = {});

bool small_is_chordal(const SmallGraph& g);
std::size_t small_cycle_rank(const SmallGraph& g);
/// Length of a shortest cycle, or 0 for a forest.
std::size_t small_girth(const SmallGraph& g);

}  // namespace edgeideal
