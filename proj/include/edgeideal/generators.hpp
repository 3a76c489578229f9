#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "edgeideal/ara_bounds.hpp"
#include "edgeideal/certificate.hpp"
#include "edgeideal/graph.hpp"

namespace edgeideal {

/// Generator set with the certificate that it generates I(G) up to radical.
struct Construction {
  GeneratorSet gens;
  Certificate cert;
  std::string family;
  std::size_t count() const { return gens.polys.size(); }
};

/// Default limit on candidate generator sets examined by the searches.
inline constexpr std::size_t kDefaultSearchBudget = 2'000'000;

/// Cycle of length 3, 4 or 5 on `labels` (default x1..xn) in cyclic order.
/// The edge between the first two labels is always a standalone generator.
Construction gens_cycle(std::size_t length, std::vector<VertexId> labels = {});

/// Five-cycle x1..x5 with r paths x1-a_i-b_i and s paths x3-c_i-d_i, generated
/// by r+s+3 polynomials.
Construction gens_lemma52(std::size_t r, std::size_t s);

/// Graph of gens_lemma52(r, s).
Graph lemma52_graph(std::size_t r, std::size_t s);

/// gens_lemma52(r, s) extended by trees hung at x1 (`at_x1`) and at x3
/// (`at_x3`). Each attachment must contain its root, meet it in exactly one
/// edge, share no other vertex with the rest, and become a whisker tree once
/// the root is removed. Throws HypothesisError otherwise.
Construction gens_lemma53(std::size_t r, std::size_t s, const std::vector<Graph>& at_x1,
                          const std::vector<Graph>& at_x3);

/// Four-cycle x1..x4 with the nonempty trees `h1` at x1 and `h2` at x2, where
/// h1 ∪ {x1x2} ∪ h2 must be a whisker tree. Throws HypothesisError otherwise.
Construction gens_lemma54(const Graph& h1, const Graph& h2);

/// n polynomials for a whisker tree with n non-terminal vertices, one of them
/// the anchor edge alone. Throws InvalidArgument for a non-whisker tree or a
/// terminal anchor, SearchBudgetExceeded when the search gives up.
Construction gens_whisker_tree(const Graph& t, const Edge& anchor,
                               std::size_t budget = kDefaultSearchBudget);

/// Partitions the edges of g into `count` groups (with `anchor` alone in one
/// of them, when given) whose sums generate I(G) up to radical by term
/// extraction. Returns nothing when no partition of that size works, and
/// throws SearchBudgetExceeded when the budget runs out first.
std::optional<Construction> partition_search(const Graph& g, std::size_t count,
                                             std::optional<Edge> anchor = std::nullopt,
                                             std::size_t budget = kDefaultSearchBudget);

/// Fewest layers P_0 (one edge), P_1, ..., P_r, r + 1 <= max_layers, such
/// that some edge of an earlier layer divides the product of any two edges of
/// the same layer; the layer sums are the generators. Nothing when no such
/// layering exists or the budget runs out.
std::optional<Construction> sv_layer_search(const Graph& g, std::size_t max_layers,
                                            std::size_t budget = kDefaultSearchBudget);

/// Generators for the graph obtained by attaching a whisker or a cycle of
/// length 3, 4 or 5 to every base vertex: a whisker graph set for the base
/// plus the cycle sets glued along the attaching edges. Longer cycles throw
/// InvalidArgument.
Construction gens_prop42(const Graph& base, const std::map<VertexId, Attachment>& attachments);

/// Generators for a unicyclic graph matching one of the five Cohen-Macaulay
/// shapes: the cycle sets, the five- and four-cycle attachment constructions,
/// or a partition search of size hgt for whisker graphs and triangle shapes.
/// Nothing when no shape matches or the search fails.
std::optional<Construction> gens_unicyclic(const Graph& g);

/// Renames vertices in the graph, the generators and the certificate.
Construction relabel(const Construction& c, const std::map<VertexId, VertexId>& names);

}  // namespace edgeideal
