#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "edgeideal/graph.hpp"
#include "edgeideal/structure.hpp"

namespace edgeideal {

/// Citation tags attached to bounds and verdicts.
namespace tags {
inline constexpr const char* kCactusBound = "cactus-cycle-bound";
inline constexpr const char* kCactusBoundImproved = "cactus-bound-divisible-cycles";
inline constexpr const char* kAttachBound = "attached-cycles-bound";
}  // namespace tags

struct BoundReport {
  Graph graph;
  std::size_t n_cycles = 0;
  std::size_t big_height = 0;
  std::size_t bound = 0;
  std::size_t improvement_k = 0;
  std::string source;
};

/// Number of cycles of a cactus.
std::size_t cycle_count(const Graph& g);

/// bight + n for a cactus.
BoundReport theorem34_bound(const Graph& g);

/// bight + n − k, where k counts cycles of length divisible by three all of
/// whose vertices have degree two except possibly two consecutive ones.
BoundReport corollary41_bound(const Graph& g);

/// Cycles counted by the improvement above.
std::vector<Cycle> divisible_open_cycles(const Graph& g);

/// Replaces the cycle edge `neighbor`–`v` by `neighbor`–y for a fresh vertex
/// y, turning the cycle into a path. `v` must have degree two and lie on
/// `cycle`; `neighbor` must be one of its two cycle neighbours (defaults to
/// the smaller one).
Graph open_cycle(const Graph& g, const Cycle& cycle, const VertexId& v,
                 std::optional<VertexId> neighbor = std::nullopt);

/// Every non-isolated vertex lies on a terminal edge.
bool is_fully_whiskered(const Graph& g);

struct WhiskerDecomposition {
  Graph base;
  /// (base vertex, pendant vertex), one per base vertex, sorted.
  std::vector<std::pair<VertexId, VertexId>> whiskers;
};

/// Recognizes g (ignoring isolated vertices) as the base graph plus exactly one
/// pendant edge at each base vertex. A lone edge is read as a whisker at its
/// smaller endpoint. Edgeless graphs are not whisker graphs.
std::optional<WhiskerDecomposition> is_whisker_graph(const Graph& g);

enum class TraceTag {
  Components,
  BaseFullyWhiskered,
  BaseSingleEdge,
  OpenCycle,
  Case1_1,
  Case1_2a,
  Case1_2b,
  Case2,
};

const char* to_string(TraceTag tag);

/// One step of the cactus bound derivation. `budget` is bight + n for the
/// node's graph; `derived` is the number of generators the derivation below
/// the node accounts for (leaves contribute 1 for an edge and bight for a
/// fully whiskered graph).
struct TraceNode {
  Graph graph;
  TraceTag tag = TraceTag::Components;
  std::string subcase;
  std::optional<VertexId> split_vertex;
  std::optional<BranchKind> branch_kind;
  /// Parts combined at this node (G1, G2 or G'1, Ḡ2), or the opened graph.
  std::vector<Graph> parts;
  /// Named cover numbers: b, b1, b2, b1', b2bar where applicable.
  std::map<std::string, std::size_t> covers;
  std::size_t n_cycles = 0;
  std::size_t budget = 0;
  std::size_t derived = 0;
  std::vector<std::shared_ptr<const TraceNode>> children;
};

struct TraceResult {
  std::shared_ptr<const TraceNode> root;
  std::size_t big_height = 0;
  std::size_t n_cycles = 0;
  std::size_t bound = 0;          // bight + n
  std::size_t derived_bound = 0;  // generators accounted for by the leaves
  std::size_t node_count = 0;
};

/// Decomposition tree mirroring the inductive proof of the cactus bound.
/// Every node re-derives its cover numbers by enumeration and asserts the
/// inequalities of its case; a failure throws TraceAssertionError.
TraceResult theorem34_trace(const Graph& g);

/// Same derivation, but the root splits the connected cactus `g` at `x`
/// (which must lie on no terminal edge) with G2 the `branch`-th branch at x,
/// skipping the preliminary cycle opening at the root.
TraceResult theorem34_trace_at(const Graph& g, const VertexId& x, std::size_t branch);

struct Attachment {
  /// 0 for a whisker, otherwise the length of the attached cycle (≥ 3).
  std::size_t cycle_length = 0;

  static Attachment whisker() { return {0}; }
  static Attachment cycle(std::size_t length) { return {length}; }
  bool is_whisker() const { return cycle_length == 0; }
  friend bool operator==(const Attachment&, const Attachment&) = default;
};

struct AttachedGraph {
  Graph graph;  // the base with every attachment glued on
  /// For each base vertex: the attachment's vertices in cyclic order starting
  /// at the base vertex (just the base vertex and its pendant for a whisker).
  std::map<VertexId, std::vector<VertexId>> attached;
};

/// Glues a whisker or cycle onto every base vertex with fresh vertex names
/// "<base>_w" / "<base>_c<k>".
AttachedGraph attach(const Graph& base, const std::map<VertexId, Attachment>& attachments);

struct AttachReport {
  BoundReport report;
  AttachedGraph built;
  std::size_t m = 0;  // attached cycles of length ≡ 1 mod 3
  bool stci = false;  // every attached cycle has length 3 or 5
};

/// bight(G°) + m for the attached graph G°. When every attached cycle has
/// length 3 or 5 also asserts hgt = bight.
AttachReport proposition42_bound(const Graph& base,
                                 const std::map<VertexId, Attachment>& attachments);

}  // namespace edgeideal
