#pragma once

#include <cstddef>
#include <vector>

#include "edgeideal/graph.hpp"

namespace edgeideal {

/// Largest number of non-isolated vertices enumeration accepts by default.
inline constexpr std::size_t kDefaultCoverVertexLimit = 26;

struct CoverOptions {
  std::size_t max_vertices = kDefaultCoverVertexLimit;  // hard ceiling 64
};

/// A minimal vertex cover of its host graph, i.e. the generator set of a
/// minimal prime of the edge ideal. Construction validates both properties.
class MinimalCover {
 public:
  MinimalCover(Graph host, VertexSet vertices);

  const Graph& host() const noexcept { return host_; }
  const VertexSet& vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  bool contains(const VertexId& v) const { return vertices_.count(v) > 0; }

  friend bool operator==(const MinimalCover& a, const MinimalCover& b) {
    return a.vertices_ == b.vertices_ && a.host_ == b.host_;
  }

 private:
  struct Trusted {};
  MinimalCover(Trusted, Graph host, VertexSet vertices)
      : host_(std::move(host)), vertices_(std::move(vertices)) {}
  friend std::vector<MinimalCover> enumerate_minimal_covers(const Graph&, const CoverOptions&);

  Graph host_;
  VertexSet vertices_;
};

struct CoverStats {
  std::size_t height = 0;      // smallest minimal cover
  std::size_t big_height = 0;  // largest minimal cover
  bool unmixed = true;
  std::vector<MinimalCover> all_covers;
};

bool is_vertex_cover(const Graph& g, const VertexSet& s);
bool is_minimal_vertex_cover(const Graph& g, const VertexSet& s);

/// All minimal vertex covers, sorted by vertex set. These are the complements
/// (within the non-isolated vertices) of the maximal independent sets. An
/// edgeless graph has exactly one, the empty cover.
std::vector<MinimalCover> enumerate_minimal_covers(const Graph& g,
                                                   const CoverOptions& options = {});

CoverStats cover_stats(const Graph& g, const CoverOptions& options = {});
std::size_t height(const Graph& g);
std::size_t big_height(const Graph& g);

/// Minimal covers of maximum size ("maximum minimal covers").
std::vector<MinimalCover> maximum_covers(const Graph& g);

/// `x` lies in every maximum minimal cover of `g`. A vertex outside `g`
/// lies in none.
bool in_every_maximum_cover(const Graph& g, const VertexId& x);

/// For `x` outside `c` and a neighbour `y` of `x`: every neighbour of `y`
/// other than `x` is in `c`.
bool is_redundant_neighbor(const Graph& g, const MinimalCover& c, const VertexId& x,
                           const VertexId& y);

/// Evaluates independently whether `y` is redundant in `c` and whether
/// `c \ {y}` is a minimal cover of `g` minus the edge `xy`, and returns
/// whether the two answers agree.
bool redundancy_remark_check(const Graph& g, const MinimalCover& c, const VertexId& x,
                             const VertexId& y);

/// c ∩ V(h). `h` must be a subgraph of the cover's host.
VertexSet induced_cover(const MinimalCover& c, const Graph& h);

/// Whether V(g1) ∩ V(g \ g1) = {x} with g1 a subgraph of g.
bool glued_at(const Graph& g, const Graph& g1, const VertexId& x);

/// Checks, over every maximum minimal cover C of `g`, that the cover it
/// induces on `g1` has at most bight(g1) elements and exactly that many when
/// x ∈ C. Requires `g1` glued to the rest of `g` at `x` and `x` in every
/// maximum minimal cover of `g1`; otherwise throws HypothesisError.
bool lemma26_check(const Graph& g, const Graph& g1, const VertexId& x);

enum class CoverUnionCase { AllContain, SomeAvoidBoth, FirstForcedSecondFree };

/// Decides whether the given case's hypothesis holds for (g1, g2, x) by full
/// enumeration of their maximum minimal covers.
bool cover_union_hypothesis(const Graph& g1, const Graph& g2, const VertexId& x,
                            CoverUnionCase which);

/// Picks maximum minimal covers C1, C2 witnessing the case's hypothesis and
/// returns C1 ∪ C2, after asserting it is a maximum minimal cover of g1 ∪ g2
/// (plus the case's side conclusions). Throws HypothesisError when the
/// hypothesis fails and Error when a conclusion fails.
MinimalCover lemma27_union(const Graph& g1, const Graph& g2, const VertexId& x,
                           CoverUnionCase which);

}  // namespace edgeideal
