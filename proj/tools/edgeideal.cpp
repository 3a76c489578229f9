#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "edgeideal/ara_bounds.hpp"
#include "edgeideal/certificate.hpp"
#include "edgeideal/cm_classify.hpp"
#include "edgeideal/covers.hpp"
#include "edgeideal/error.hpp"
#include "edgeideal/generators.hpp"
#include "edgeideal/graph_gen.hpp"
#include "edgeideal/graph_io.hpp"
#include "edgeideal/homology.hpp"
#include "edgeideal/report.hpp"
#include "edgeideal/structure.hpp"

using namespace edgeideal;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

// Exact pd is attempted only up to this many non-isolated vertices.
constexpr std::size_t kPdVertexLimit = 14;

struct Options {
  std::string graph_path = "-";
  bool timing = false;
  bool trace = false;
  bool improve = false;
  bool all_covers = false;
  std::string family;
  std::size_t length = 5;
  std::size_t r = 0;
  std::size_t s = 0;
  std::vector<std::string> at_x1, at_x3;
  std::string h1, h2;
  std::vector<std::string> attach;
  std::string anchor;
  std::size_t max_layers = 0;
  std::size_t budget = kDefaultSearchBudget;
  std::string out = "certificate.json";
  std::string cert_path;
  std::uint64_t seed = 1;
  std::size_t count = 200;
};

json covers_json(const std::vector<MinimalCover>& covers) {
  json out = json::array();
  for (const auto& c : covers) {
    json vs = json::array();
    for (const auto& v : c.vertices()) vs.push_back(v.label());
    out.push_back(vs);
  }
  return out;
}

Report make_report(std::string command, const Graph& g) {
  Report r;
  r.command = std::move(command);
  r.graph = summarize(g);
  return r;
}

std::optional<std::size_t> pd_if_small(const Graph& g) {
  if (g.non_isolated_vertices().size() > kPdVertexLimit) return std::nullopt;
  return projective_dimension(g);
}

void chain_json(const Graph& g, json& out) {
  CoverStats st = cover_stats(g);
  out["height"] = st.height;
  out["big_height"] = st.big_height;
  if (auto pd = pd_if_small(g)) out["pd"] = *pd;
}

Report analyze(const Graph& g) {
  Report r = make_report("analyze", g);
  chain_json(g, r.result);
  r.result["unmixed"] = cover_stats(g).unmixed;
  r.result["fully_whiskered"] = is_fully_whiskered(g);
  r.result["whisker_graph"] = is_whisker_graph(g).has_value();
  return r;
}

Report covers(const Graph& g, const Options& o) {
  Report r = make_report("covers", g);
  CoverStats st = cover_stats(g);
  r.result["height"] = st.height;
  r.result["big_height"] = st.big_height;
  r.result["unmixed"] = st.unmixed;
  r.result["count"] = st.all_covers.size();
  r.result["maximum_covers"] = covers_json(maximum_covers(g));
  if (o.all_covers) r.result["covers"] = covers_json(st.all_covers);
  return r;
}

Report bound(const Graph& g, const Options& o) {
  Report r = make_report("bound", g);
  BoundReport b = o.improve ? corollary41_bound(g) : theorem34_bound(g);
  r.result = to_json(b);
  r.citations = {b.source};
  chain_json(g, r.result["chain"]);
  if (o.trace) {
    TraceResult t = theorem34_trace(g);
    r.result["trace"] = {{"bound", t.bound},
                         {"derived_bound", t.derived_bound},
                         {"nodes", t.node_count},
                         {"root", to_json(*t.root)}};
  }
  return r;
}

Graph read(const std::string& path) { return parse_graph_file(path); }

std::map<VertexId, Attachment> parse_attachments(const Graph& base, const std::vector<std::string>& items) {
  std::map<VertexId, Attachment> out;
  for (const auto& v : base.vertices()) out[v] = Attachment::whisker();
  for (const auto& item : items) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw InvalidArgument("attachment must look like vertex=whisker or vertex=C<len>");
    VertexId v(item.substr(0, eq));
    std::string kind = item.substr(eq + 1);
    if (!base.has_vertex(v)) throw InvalidArgument("attachment at unknown vertex " + v.label());
    if (kind == "whisker") {
      out[v] = Attachment::whisker();
    } else if (kind.size() > 1 && (kind[0] == 'C' || kind[0] == 'c')) {
      out[v] = Attachment::cycle(std::stoul(kind.substr(1)));
    } else {
      throw InvalidArgument("unknown attachment kind '" + kind + "'");
    }
  }
  return out;
}

Edge parse_edge(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw InvalidArgument("edge must be written u,v");
  return Edge(VertexId(text.substr(0, comma)), VertexId(text.substr(comma + 1)));
}

Construction build(const Options& o, std::vector<std::string>& citations) {
  const std::string& f = o.family;
  if (f == "cycle") {
    citations = {tags::kCycleGenerators};
    return gens_cycle(o.length);
  }
  if (f == "lemma52") {
    citations = {tags::kFiveCyclePaths};
    return gens_lemma52(o.r, o.s);
  }
  if (f == "lemma53") {
    citations = {tags::kFiveCyclePaths};
    std::vector<Graph> l1, l3;
    for (const auto& p : o.at_x1) l1.push_back(read(p));
    for (const auto& p : o.at_x3) l3.push_back(read(p));
    return gens_lemma53(o.r, o.s, l1, l3);
  }
  if (f == "lemma54") {
    citations = {tags::kFourCycleTrees};
    if (o.h1.empty() || o.h2.empty()) throw InvalidArgument("lemma54 needs --h1 and --h2");
    return gens_lemma54(read(o.h1), read(o.h2));
  }
  if (f == "prop42") {
    citations = {tags::kAttachBound, tags::kWhiskerGraphStci};
    Graph base = read(o.graph_path);
    return gens_prop42(base, parse_attachments(base, o.attach));
  }
  if (f == "whisker") {
    citations = {tags::kWhiskerGraphStci};
    Graph t = read(o.graph_path);
    if (!o.anchor.empty()) return gens_whisker_tree(t, parse_edge(o.anchor), o.budget);
    for (const auto& e : t.edges()) {
      if (!is_terminal_vertex(t, e.u) && !is_terminal_vertex(t, e.v)) return gens_whisker_tree(t, e, o.budget);
    }
    throw InvalidArgument("whisker tree has no non-terminal edge");
  }
  if (f == "svsearch") {
    Graph g = read(o.graph_path);
    std::size_t layers = o.max_layers ? o.max_layers : big_height(g);
    auto c = sv_layer_search(g, layers, o.budget);
    if (!c) throw Error("no layering with at most " + std::to_string(layers) + " layers found");
    return *c;
  }
  if (f == "unicyclic") {
    citations = {tags::kUnicyclicStci};
    auto c = gens_unicyclic(read(o.graph_path));
    if (!c) throw Error("no generator set found for this unicyclic graph");
    return *c;
  }
  throw InvalidArgument("unknown family '" + f + "'");
}

int gens(const Options& o, Report& r) {
  r.command = "gens";
  Construction c = build(o, r.citations);
  r.graph = summarize(c.gens.graph);
  r.result = to_json(c);
  r.result["big_height"] = big_height(c.gens.graph);
  r.result["height"] = height(c.gens.graph);
  if (!o.out.empty()) {
    std::ofstream f(o.out);
    if (!f) throw InvalidArgument("cannot write " + o.out);
    f << certificate_to_json(c.gens, c.cert) << "\n";
    r.result["certificate_file"] = o.out;
  }
  return r.result["verdict"]["ok"].get<bool>() ? kExitOk : kExitFail;
}

int verify(const Options& o, Report& r) {
  r.command = "verify";
  std::ifstream in(o.cert_path);
  if (!in) throw InvalidArgument("cannot read " + o.cert_path);
  std::stringstream ss;
  ss << in.rdbuf();
  CertificateFile f = certificate_from_json(ss.str());
  Graph g;
  if (o.graph_path != "-" || !f.graph) {
    g = read(o.graph_path);
    if (f.graph && !(f.graph->drop_isolated() == g.drop_isolated())) {
      r.result["graph_matches"] = false;
    }
  } else {
    g = *f.graph;
  }
  r.graph = summarize(g);
  Verdict v = verify_certificate({g, f.polys}, f.cert);
  r.result["ok"] = v.ok && !r.result.contains("graph_matches");
  r.result["reason"] = r.result.contains("graph_matches") ? std::string("certificate is for another graph") : v.reason;
  if (v.failed_step) r.result["failed_step"] = *v.failed_step;
  r.result["count"] = f.polys.size();
  r.result["big_height"] = big_height(g);
  return r.result["ok"].get<bool>() ? kExitOk : kExitFail;
}

Report classify(const Graph& g) {
  Report r = make_report("classify", g);
  CmVerdict v = stci_verdict(g);
  r.result = to_json(v);
  r.citations = v.citations;
  json checks = json::object();
  auto run = [&](const char* name, auto fn) {
    try {
      checks[name] = to_json(fn(g));
    } catch (const HypothesisError& e) {
      checks[name] = {{"hypothesis", e.what()}};
    }
  };
  run(tags::kUnicyclic, classify_unicyclic);
  run(tags::kChordal, corollary44);
  run(tags::kGirthSix, corollary61);
  r.result["results"] = checks;
  return r;
}

Report pd(const Graph& g) {
  Report r = make_report("pd", g);
  BettiTable t = betti_table(g);
  json entries = json::array();
  for (const auto& [key, beta] : t.entries) entries.push_back({{"i", key.first}, {"size", key.second}, {"beta", beta}});
  r.result = {{"pd", t.pd}, {"field", "F2"}, {"betti", entries}, {"height", height(g)}};
  return r;
}

int selftest(const Options& o, Report& r) {
  r.command = "selftest";
  std::mt19937_64 rng(o.seed);
  std::size_t failures = 0;
  json failed = json::array();
  for (std::size_t i = 0; i < o.count; ++i) {
    Graph g = random_cactus(rng, 12);
    try {
      TraceResult t = theorem34_trace(g);
      CoverStats st = cover_stats(g);
      bool ok = st.height <= st.big_height && t.bound == st.big_height + t.n_cycles;
      if (auto p = g.num_vertices() <= 10 ? pd_if_small(g) : std::nullopt) {
        ok = ok && st.big_height <= *p && *p <= t.bound;
      }
      if (!ok) throw Error("chain hgt <= bight <= pd <= bound violated");
    } catch (const Error& e) {
      ++failures;
      failed.push_back({{"graph", serialize_graph(g)}, {"error", e.what()}});
    }
  }
  r.result = {{"seed", o.seed}, {"instances", o.count}, {"failures", failures}, {"failed", failed}};
  r.citations = {tags::kCactusBound};
  return failures == 0 ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edge ideal invariants, cactus bounds and radical generator certificates"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--timing", o.timing, "Include wall time in the report");

  auto graph_arg = [&](CLI::App* sub) { sub->add_option("graph", o.graph_path, "Edge-list file, - for stdin"); };
  auto* a = app.add_subcommand("analyze", "Summary, covers and the invariant chain");
  graph_arg(a);
  auto* c = app.add_subcommand("covers", "Minimal vertex covers");
  graph_arg(c);
  c->add_flag("--all", o.all_covers, "List every minimal cover");
  auto* b = app.add_subcommand("bound", "Cactus upper bound on the arithmetical rank");
  graph_arg(b);
  b->add_flag("--trace", o.trace, "Emit the derivation tree");
  b->add_flag("--improve", o.improve, "Subtract cycles of length divisible by three");
  auto* g = app.add_subcommand("gens", "Construct generators with a certificate");
  graph_arg(g);
  g->add_option("--family", o.family, "cycle, lemma52, lemma53, lemma54, prop42, whisker, svsearch, unicyclic")
      ->required();
  g->add_option("--length", o.length, "Cycle length (cycle)");
  g->add_option("--r", o.r, "Paths at x1");
  g->add_option("--s", o.s, "Paths at x3");
  g->add_option("--at-x1", o.at_x1, "Tree files attached at x1 (lemma53)");
  g->add_option("--at-x3", o.at_x3, "Tree files attached at x3 (lemma53)");
  g->add_option("--h1", o.h1, "Tree file at x1 (lemma54)");
  g->add_option("--h2", o.h2, "Tree file at x2 (lemma54)");
  g->add_option("--attach", o.attach, "vertex=whisker or vertex=C<len> (prop42)");
  g->add_option("--anchor", o.anchor, "Anchor edge u,v (whisker)");
  g->add_option("--max-layers", o.max_layers, "Layer limit (svsearch), default bight");
  g->add_option("--budget", o.budget, "Search budget");
  g->add_option("--out", o.out, "Certificate file, empty to skip");
  auto* v = app.add_subcommand("verify", "Check a certificate file");
  v->add_option("certificate", o.cert_path, "Certificate file")->required();
  v->add_option("--graph", o.graph_path, "Graph file overriding the embedded one");
  auto* cl = app.add_subcommand("classify", "Cohen-Macaulay and complete intersection verdicts");
  graph_arg(cl);
  auto* p = app.add_subcommand("pd", "Betti numbers and projective dimension over F2");
  graph_arg(p);
  auto* st = app.add_subcommand("selftest", "Invariant chain on random cacti");
  st->add_option("--seed", o.seed, "Random seed");
  st->add_option("--count", o.count, "Number of cacti");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  Report r;
  int code = kExitOk;
  try {
    if (a->parsed()) r = analyze(read(o.graph_path));
    if (c->parsed()) r = covers(read(o.graph_path), o);
    if (b->parsed()) r = bound(read(o.graph_path), o);
    if (g->parsed()) code = gens(o, r);
    if (v->parsed()) code = verify(o, r);
    if (cl->parsed()) r = classify(read(o.graph_path));
    if (p->parsed()) r = pd(read(o.graph_path));
    if (st->parsed()) code = selftest(o, r);
  } catch (const HypothesisError& e) {
    std::cerr << "hypothesis not met (" << e.result() << "): " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SizeLimitError& e) {
    std::cerr << "size limit: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SearchBudgetExceeded& e) {
    std::cerr << "search budget exceeded: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "failed: " << e.what() << "\n";
    return kExitFail;
  }
  if (o.timing) {
    r.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  std::cout << to_json(r).dump(2) << "\n";
  return code;
}
