#include "edgeideal/cm_classify.hpp"

#include <algorithm>

#include "edgeideal/covers.hpp"
#include "edgeideal/error.hpp"
#include "edgeideal/structure.hpp"

namespace edgeideal {

namespace {

std::string join(const std::vector<VertexId>& vs) {
  std::string s;
  for (const auto& v : vs) s += (s.empty() ? "" : " ") + v.label();
  return s;
}

std::string describe_partition(const std::vector<VertexSet>& parts) {
  std::string s;
  for (const auto& p : parts) s += (s.empty() ? "" : " ") + to_string(p);
  return s;
}

std::string describe(const WhiskerDecomposition& d) {
  std::string s;
  for (const auto& [b, w] : d.whiskers) s += (s.empty() ? "" : " ") + b.label() + "-" + w.label();
  return s;
}

// Every component of `rest` is a single edge or a whisker tree, and each
// whisker tree meets the rest of g only at vertices non-terminal in it.
bool whisker_trees_and_edges(const Graph& g, const Graph& rest) {
  for (const auto& comp : rest.connected_components()) {
    Graph h = rest.induced_subgraph(comp);
    if (h.empty()) return false;
    if (h.num_edges() == 1 && h.num_vertices() == 2) continue;
    if (!is_whisker_tree(h)) return false;
    for (const auto& v : comp) {
      if (g.degree(v) > h.degree(v) && h.degree(v) == 1) return false;
    }
  }
  return true;
}

Graph outside_cycle(const Graph& g, const Cycle& c) {
  VertexSet rest = g.vertex_set();
  for (const auto& v : c.vertices) rest.erase(v);
  return g.induced_subgraph(rest);
}

}  // namespace

const char* to_string(CmStatus s) {
  switch (s) {
    case CmStatus::CM: return "CM";
    case CmStatus::NotCM: return "NotCM";
    case CmStatus::Unknown: return "Unknown";
  }
  return "?";
}

const char* to_string(StciStatus s) { return s == StciStatus::Yes ? "Yes" : "Unknown"; }

std::optional<WhiskerDecomposition> is_whisker_tree(const Graph& g) {
  if (!is_tree(g) || g.num_edges() < 2) return std::nullopt;
  return is_whisker_graph(g);
}

std::optional<std::vector<VertexSet>> simplex_partition_check(const Graph& g) {
  auto sx = simplexes(g);
  std::map<VertexId, std::size_t> hits;
  for (const auto& s : sx) {
    for (const auto& v : s) ++hits[v];
  }
  for (const auto& v : g.vertices()) {
    if (hits[v] != 1) return std::nullopt;
  }
  return sx;
}

std::optional<UnicyclicMatch> match_unicyclic(const Graph& g) {
  if (!g.is_connected() || cycle_rank(g) != 1) {
    throw HypothesisError(tags::kUnicyclic, "graph is not connected with exactly one cycle");
  }
  const Cycle c = cycles(g).front();
  const std::size_t len = c.length();
  UnicyclicMatch m;
  m.cycle = c;
  auto deg = [&](const VertexId& v) { return g.degree(v); };

  if (g.num_vertices() == len && (len == 3 || len == 5)) {
    m.case_number = 1;
    return m;
  }
  if (is_whisker_graph(g)) {
    m.case_number = 2;
    return m;
  }
  const Graph rest = outside_cycle(g, c);
  if (len == 3) {
    bool low = std::any_of(c.vertices.begin(), c.vertices.end(), [&](const VertexId& v) { return deg(v) == 2; });
    if (low && whisker_trees_and_edges(g, rest)) {
      m.case_number = 3;
      return m;
    }
  }
  if (len == 5) {
    bool adjacent_high = false;
    for (std::size_t i = 0; i < 5; ++i) {
      if (deg(c.vertices[i]) > 2 && deg(c.vertices[(i + 1) % 5]) > 2) adjacent_high = true;
    }
    if (!adjacent_high && whisker_trees_and_edges(g, rest)) {
      m.case_number = 4;
      return m;
    }
  }
  if (len == 4) {
    const auto cycle_edges = c.edges();
    const Graph forest = g.without_edges(cycle_edges);
    for (std::size_t i = 0; i < 4; ++i) {
      const VertexId& x3 = c.vertices[i];
      const VertexId& x4 = c.vertices[(i + 1) % 4];
      if (deg(x3) != 2 || deg(x4) != 2) continue;
      const VertexId& x1 = c.vertices[(i + 2) % 4];
      const VertexId& x2 = c.vertices[(i + 3) % 4];
      VertexSet comp1, comp2;
      for (const auto& comp : forest.connected_components()) {
        if (comp.count(x1)) comp1 = comp;
        if (comp.count(x2)) comp2 = comp;
      }
      Graph h1 = forest.induced_subgraph(comp1), h2 = forest.induced_subgraph(comp2);
      if (h1.empty() || h2.empty()) continue;
      Graph joined = graph_union(h1, h2).with_edges(std::vector<Edge>{Edge(x1, x2)});
      if (!is_whisker_tree(joined)) continue;
      m.case_number = 5;
      // x4 is adjacent to x1, x3 to x2 in the cycle x1 x2 x3 x4.
      m.labelled = {x1, x2, x3, x4};
      m.h1 = h1;
      m.h2 = h2;
      return m;
    }
  }
  return std::nullopt;
}

CmVerdict classify_unicyclic(const Graph& g) {
  auto m = match_unicyclic(g);
  CmVerdict v;
  v.citations.push_back(tags::kUnicyclic);
  const Cycle c = cycles(g).front();
  v.evidence["cycle"] = join(c.vertices);
  if (!m) {
    v.status = CmStatus::NotCM;
    v.evidence["failed"] = "no unicyclic Cohen-Macaulay shape matches";
    return v;
  }
  static const char* stci_source[] = {"", tags::kCycleGenerators, tags::kWhiskerGraphStci,
                                      tags::kCactusBoundImproved, tags::kFiveCyclePaths,
                                      tags::kFourCycleTrees};
  v.status = CmStatus::CM;
  v.stci = StciStatus::Yes;
  v.case_tag = "unicyclic-case-" + std::to_string(m->case_number);
  v.citations.push_back(tags::kUnicyclicStci);
  v.citations.push_back(stci_source[m->case_number]);
  if (m->case_number == 5) {
    v.evidence["x1 x2 x3 x4"] = join(m->labelled);
    v.evidence["h1"] = join(m->h1.vertices());
    v.evidence["h2"] = join(m->h2.vertices());
  }
  return v;
}

CmVerdict corollary44(const Graph& g) {
  const bool chordal = is_chordal(g);
  if (!chordal && (has_cycle_subgraph(g, 4) || has_cycle_subgraph(g, 5))) {
    throw HypothesisError(tags::kChordal, "graph is neither chordal nor free of 4- and 5-cycles");
  }
  const auto stats = cover_stats(g);
  const auto partition = simplex_partition_check(g);
  if (stats.unmixed != partition.has_value()) {
    throw Error(std::string(tags::kChordal) + ": purity and the simplex partition disagree");
  }
  CmVerdict v;
  v.case_tag = "chordal";
  v.citations.push_back(tags::kChordal);
  v.evidence["class"] = chordal ? "chordal" : "no 4- or 5-cycles";
  v.evidence["height"] = std::to_string(stats.height);
  v.evidence["big_height"] = std::to_string(stats.big_height);
  if (partition) {
    v.status = CmStatus::CM;
    v.stci = StciStatus::Yes;
    v.evidence["simplex_partition"] = describe_partition(*partition);
  } else {
    v.status = CmStatus::NotCM;
    v.evidence["failed"] = "not pure and some vertex lies in no simplex or in two";
  }
  return v;
}

CmVerdict corollary61(const Graph& g) {
  if (!g.is_connected() || g.empty()) {
    throw HypothesisError(tags::kGirthSix, "graph must be connected with at least one edge");
  }
  if (g.num_edges() == 1) throw HypothesisError(tags::kGirthSix, "graph is a single edge");
  if (g.num_vertices() == 7 &&
      std::all_of(g.vertices().begin(), g.vertices().end(), [&](const VertexId& v) { return g.degree(v) == 2; })) {
    throw HypothesisError(tags::kGirthSix, "graph is the seven-cycle");
  }
  if (!induced_cycles_shorter_than(g, 6).empty()) {
    throw HypothesisError(tags::kGirthSix, "graph has an induced cycle of length 3, 4 or 5");
  }
  const auto stats = cover_stats(g);
  const auto whiskers = is_whisker_graph(g);
  if (stats.unmixed != whiskers.has_value()) {
    throw Error(std::string(tags::kGirthSix) + ": purity and the whisker shape disagree");
  }
  CmVerdict v;
  v.case_tag = "girth-six";
  v.citations.push_back(tags::kGirthSix);
  v.evidence["height"] = std::to_string(stats.height);
  v.evidence["big_height"] = std::to_string(stats.big_height);
  if (whiskers) {
    v.status = CmStatus::CM;
    v.stci = StciStatus::Yes;
    v.citations.push_back(tags::kWhiskerGraphStci);
    v.evidence["whiskers"] = describe(*whiskers);
  } else {
    v.status = CmStatus::NotCM;
    v.evidence["failed"] = "not pure and not a whisker graph";
  }
  return v;
}

std::optional<std::map<VertexId, Attachment>> attached_cycles_shape(const Graph& g, Graph* base_out) {
  Graph h = g.drop_isolated();
  if (h.empty() || h.num_vertices() != g.num_vertices()) return std::nullopt;
  std::map<VertexId, Attachment> att;
  VertexSet used;
  auto claim = [&](const VertexId& v) { return used.insert(v).second; };
  // Pendant edges; a lone edge hangs at its smaller end.
  for (const auto& v : h.vertices()) {
    if (h.degree(v) != 1) continue;
    VertexId root = h.neighbors(v).front();
    if (h.degree(root) == 1 && root > v) continue;
    if (att.count(root) || !claim(v)) return std::nullopt;
    att.emplace(root, Attachment::whisker());
  }
  // Cycle blocks all of whose vertices but at most one have degree two.
  for (const auto& block : biconnected_components(h)) {
    if (block.size() < 3) continue;
    VertexSet vs;
    for (const auto& e : block) {
      vs.insert(e.u);
      vs.insert(e.v);
    }
    if (vs.size() != block.size()) continue;
    std::vector<VertexId> high;
    for (const auto& v : vs) {
      if (h.degree(v) != 2) high.push_back(v);
    }
    if (high.size() > 1) continue;
    VertexId root = high.empty() ? *vs.begin() : high.front();
    if (att.count(root)) return std::nullopt;
    att.emplace(root, Attachment::cycle(vs.size()));
    for (const auto& v : vs) {
      if (v != root && !claim(v)) return std::nullopt;
    }
  }
  VertexSet roots;
  for (const auto& [r, a] : att) {
    if (used.count(r)) return std::nullopt;
    roots.insert(r);
  }
  for (const auto& v : h.vertices()) {
    if (!roots.count(v) && !used.count(v)) return std::nullopt;
  }
  Graph base = h.induced_subgraph(roots);
  // Every edge must be a base edge or lie on an attachment.
  std::size_t attached_edges = 0;
  for (const auto& [r, a] : att) attached_edges += a.is_whisker() ? 1 : a.cycle_length;
  if (base.num_edges() + attached_edges != h.num_edges()) return std::nullopt;
  if (base_out) *base_out = base;
  return att;
}

CmVerdict stci_verdict(const Graph& g) {
  std::vector<CmVerdict> found;
  if (g.is_connected() && cycle_rank(g) == 1) found.push_back(classify_unicyclic(g));
  try {
    found.push_back(corollary44(g));
  } catch (const HypothesisError&) {
  }
  try {
    found.push_back(corollary61(g));
  } catch (const HypothesisError&) {
  }
  if (auto shape = attached_cycles_shape(g)) {
    bool small = std::all_of(shape->begin(), shape->end(), [](const auto& kv) {
      return kv.second.is_whisker() || kv.second.cycle_length == 3 || kv.second.cycle_length == 5;
    });
    if (small) {
      CmVerdict v;
      v.status = CmStatus::CM;
      v.stci = StciStatus::Yes;
      v.case_tag = "attached-cycles";
      v.citations.push_back(tags::kAttachBound);
      std::string roots;
      for (const auto& [r, a] : *shape) {
        roots += (roots.empty() ? "" : " ") + r.label() + ":" +
                 (a.is_whisker() ? std::string("whisker") : "C" + std::to_string(a.cycle_length));
      }
      v.evidence["attachments"] = roots;
      found.push_back(v);
    }
  }
  for (const auto& a : found) {
    for (const auto& b : found) {
      if (a.status != CmStatus::Unknown && b.status != CmStatus::Unknown && a.status != b.status) {
        throw Error("classification results disagree: " + a.case_tag + " vs " + b.case_tag);
      }
    }
  }
  for (const auto& v : found) {
    if (v.stci == StciStatus::Yes) return v;
  }
  for (const auto& v : found) {
    if (v.status != CmStatus::Unknown) return v;
  }
  CmVerdict none;
  none.evidence["failed"] = "no classification result applies";
  return none;
}

}  // namespace edgeideal
