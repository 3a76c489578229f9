#pragma once

#include <optional>
#include <string>
#include <vector>

#include "edgeideal/ara_bounds.hpp"
#include "edgeideal/cm_classify.hpp"
#include "edgeideal/generators.hpp"
#include "edgeideal/graph.hpp"
#include "json.hpp"

namespace edgeideal {

struct GraphSummary {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t isolated = 0;
  std::size_t components = 0;
  std::size_t cycle_rank = 0;
  bool cactus = false;
  bool forest = false;
  bool chordal = false;
  friend bool operator==(const GraphSummary&, const GraphSummary&) = default;
};

GraphSummary summarize(const Graph& g);

/// One command's output record.
struct Report {
  std::string command;
  std::optional<GraphSummary> graph;
  nlohmann::json result = nlohmann::json::object();
  std::vector<std::string> citations;
  /// Wall time, present only when requested so that reports stay
  /// deterministic by default.
  std::optional<double> timing_ms;
  friend bool operator==(const Report&, const Report&) = default;
};

nlohmann::json to_json(const Report& r);
/// Throws InvalidArgument on a malformed record.
Report report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Graph& g);
nlohmann::json to_json(const BoundReport& b);
nlohmann::json to_json(const TraceNode& node);
nlohmann::json to_json(const CmVerdict& v);
nlohmann::json to_json(const Construction& c);

}  // namespace edgeideal
