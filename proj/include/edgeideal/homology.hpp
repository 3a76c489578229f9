#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "edgeideal/graph.hpp"

namespace edgeideal {

/// Largest number of non-isolated vertices the homology oracle accepts.
inline constexpr std::size_t kHomologyVertexLimit = 14;

/// Simplicial complex given by its facets (maximal faces).
struct SimplicialComplex {
  std::vector<VertexId> vertices;
  std::vector<VertexSet> facets;  // sorted, pairwise non-contained
};

/// Faces are the independent sets of g. Isolated vertices are cone points and
/// appear in every facet.
SimplicialComplex independence_complex(const Graph& g);

/// Ranks of reduced homology over F2, indexed by dimension + 1 (so entry 0 is
/// dimension -1). The void complex (no faces at all) is not representable;
/// a complex with no facets is the empty complex {∅}, acyclic except in
/// dimension -1.
std::vector<std::size_t> reduced_homology_ranks(const SimplicialComplex& complex);

struct BettiTable {
  /// (homological degree i, |W|) -> β, nonzero entries only.
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> entries;
  std::size_t pd = 0;
};

/// Graded Betti numbers of R/I(G) over F2 via Hochster's formula,
/// β_{i,W} = dim H̃_{|W|-i-1}(Δ_W), summed over W of each size, where W ranges
/// over subsets of the non-isolated vertices.
BettiTable betti_table(const Graph& g);

/// Projective dimension of R/I(G) over F2.
std::size_t projective_dimension(const Graph& g);

}  // namespace edgeideal
