#include "edgeideal/report.hpp"

#include "edgeideal/error.hpp"
#include "edgeideal/structure.hpp"

namespace edgeideal {

using nlohmann::json;

GraphSummary summarize(const Graph& g) {
  GraphSummary s;
  s.vertices = g.num_vertices();
  s.edges = g.num_edges();
  for (const auto& v : g.vertices()) {
    if (g.degree(v) == 0) ++s.isolated;
  }
  s.components = g.connected_components().size();
  s.cycle_rank = cycle_rank(g);
  s.cactus = is_cactus(g);
  s.forest = is_forest(g);
  s.chordal = is_chordal(g);
  return s;
}

namespace {

json summary_json(const GraphSummary& s) {
  return {{"vertices", s.vertices}, {"edges", s.edges},     {"isolated", s.isolated},
          {"components", s.components}, {"cycle_rank", s.cycle_rank}, {"cactus", s.cactus},
          {"forest", s.forest},     {"chordal", s.chordal}};
}

GraphSummary summary_from(const json& j) {
  GraphSummary s;
  s.vertices = j.at("vertices").get<std::size_t>();
  s.edges = j.at("edges").get<std::size_t>();
  s.isolated = j.at("isolated").get<std::size_t>();
  s.components = j.at("components").get<std::size_t>();
  s.cycle_rank = j.at("cycle_rank").get<std::size_t>();
  s.cactus = j.at("cactus").get<bool>();
  s.forest = j.at("forest").get<bool>();
  s.chordal = j.at("chordal").get<bool>();
  return s;
}

}  // namespace

json to_json(const Report& r) {
  json j;
  j["command"] = r.command;
  j["graph"] = r.graph ? summary_json(*r.graph) : json(nullptr);
  j["result"] = r.result;
  j["citations"] = r.citations;
  if (r.timing_ms) j["timing_ms"] = *r.timing_ms;
  return j;
}

Report report_from_json(const json& j) {
  try {
    Report r;
    r.command = j.at("command").get<std::string>();
    if (!j.at("graph").is_null()) r.graph = summary_from(j.at("graph"));
    r.result = j.at("result");
    r.citations = j.at("citations").get<std::vector<std::string>>();
    if (j.contains("timing_ms")) r.timing_ms = j.at("timing_ms").get<double>();
    return r;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed report: ") + e.what());
  }
}

json to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u.label(), e.v.label()});
  json isolated = json::array();
  for (const auto& v : g.vertices()) {
    if (g.degree(v) == 0) isolated.push_back(v.label());
  }
  return {{"edges", edges}, {"isolated", isolated}};
}

json to_json(const BoundReport& b) {
  return {{"cycles", b.n_cycles},
          {"big_height", b.big_height},
          {"bound", b.bound},
          {"improvement_k", b.improvement_k},
          {"source", b.source}};
}

json to_json(const TraceNode& node) {
  json j;
  j["tag"] = to_string(node.tag);
  if (!node.subcase.empty()) j["subcase"] = node.subcase;
  if (node.split_vertex) j["split_vertex"] = node.split_vertex->label();
  if (node.branch_kind) j["branch_kind"] = to_string(*node.branch_kind);
  j["graph"] = to_json(node.graph);
  json parts = json::array();
  for (const auto& p : node.parts) parts.push_back(to_json(p));
  j["parts"] = parts;
  j["covers"] = node.covers;
  j["cycles"] = node.n_cycles;
  j["budget"] = node.budget;
  j["derived"] = node.derived;
  json children = json::array();
  for (const auto& c : node.children) children.push_back(to_json(*c));
  j["children"] = children;
  return j;
}

json to_json(const CmVerdict& v) {
  return {{"status", to_string(v.status)},
          {"stci", to_string(v.stci)},
          {"case_tag", v.case_tag},
          {"citations", v.citations},
          {"evidence", v.evidence}};
}

json to_json(const Construction& c) {
  json polys = json::array();
  for (const auto& p : c.gens.polys) polys.push_back(to_string(p));
  Verdict v = verify_certificate(c.gens, c.cert);
  json verdict = {{"ok", v.ok}, {"reason", v.reason}};
  if (v.failed_step) verdict["failed_step"] = *v.failed_step;
  return {{"family", c.family},
          {"count", c.count()},
          {"generators", polys},
          {"steps", c.cert.steps.size()},
          {"verdict", verdict}};
}

}  // namespace edgeideal
