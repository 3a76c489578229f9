#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "edgeideal/ara_bounds.hpp"
#include "edgeideal/graph.hpp"

namespace edgeideal {

namespace tags {
inline constexpr const char* kUnicyclic = "unicyclic-cm-classification";
inline constexpr const char* kUnicyclicStci = "unicyclic-cm-stci";
inline constexpr const char* kChordal = "chordal-or-c4c5-free-equivalence";
inline constexpr const char* kGirthSix = "girth-six-whisker-equivalence";
inline constexpr const char* kCycleGenerators = "cycle-radical-generators";
inline constexpr const char* kWhiskerGraphStci = "whisker-graph-stci";
inline constexpr const char* kFiveCyclePaths = "five-cycle-path-attachments";
inline constexpr const char* kFourCycleTrees = "four-cycle-tree-attachments";
}  // namespace tags

enum class CmStatus { CM, NotCM, Unknown };
enum class StciStatus { Yes, Unknown };

const char* to_string(CmStatus s);
const char* to_string(StciStatus s);

struct CmVerdict {
  CmStatus status = CmStatus::Unknown;
  StciStatus stci = StciStatus::Unknown;
  /// "unicyclic-case-1".."unicyclic-case-5", "chordal", "girth-six",
  /// "attached-cycles" or empty.
  std::string case_tag;
  /// Result tags the verdict relies on; never empty when stci is Yes.
  std::vector<std::string> citations;
  /// Witness data keyed by name (covers, partition, decomposition, failed
  /// condition).
  std::map<std::string, std::string> evidence;
};

/// Tree that is the whisker graph of a tree. A single edge is not one.
std::optional<WhiskerDecomposition> is_whisker_tree(const Graph& g);

/// Simplexes partitioning the vertex set, when every vertex lies in exactly
/// one simplex.
std::optional<std::vector<VertexSet>> simplex_partition_check(const Graph& g);

/// Pieces of a unicyclic graph matching one of the five Cohen-Macaulay shapes.
struct UnicyclicMatch {
  int case_number = 0;  // 1..5
  Cycle cycle;
  /// Case 5: the cycle as x1, x2, x3, x4 with x3, x4 of degree two, and the
  /// trees h1 at x1 and h2 at x2.
  std::vector<VertexId> labelled;
  Graph h1, h2;
};

/// First of the five shapes g has, checked in order. g must be connected with
/// exactly one cycle (HypothesisError otherwise).
std::optional<UnicyclicMatch> match_unicyclic(const Graph& g);

/// CM iff one of the five shapes matches; STCI for every match.
CmVerdict classify_unicyclic(const Graph& g);

/// For chordal graphs and graphs without 4- or 5-cycle subgraphs: pure iff
/// every vertex lies in exactly one simplex, and then CM and STCI. Throws
/// HypothesisError outside these classes and Error if the two sides disagree.
CmVerdict corollary44(const Graph& g);

/// For connected graphs with an edge, other than a single edge and C7, with no
/// induced cycle of length 3, 4 or 5: pure iff whisker graph, and then CM and
/// STCI. Throws HypothesisError outside this class and Error if the two sides
/// disagree.
CmVerdict corollary61(const Graph& g);

/// Reads g as a base with one whisker or cycle attached at every base vertex
/// and returns the attachments by root. A lone edge hangs at its smaller end
/// and a lone cycle at its smallest vertex.
std::optional<std::map<VertexId, Attachment>> attached_cycles_shape(const Graph& g,
                                                                    Graph* base = nullptr);

/// Applies every result whose hypothesis holds; returns the STCI verdict
/// when one is found, otherwise the first decisive one, otherwise Unknown.
/// Throws Error if two results disagree.
CmVerdict stci_verdict(const Graph& g);

}  // namespace edgeideal
