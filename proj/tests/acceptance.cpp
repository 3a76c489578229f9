#include <algorithm>
#include <chrono>
#include <cstdio>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "edgeideal/ara_bounds.hpp"
#include "edgeideal/certificate.hpp"
#include "edgeideal/cm_classify.hpp"
#include "edgeideal/covers.hpp"
#include "edgeideal/error.hpp"
#include "edgeideal/generators.hpp"
#include "edgeideal/graph_gen.hpp"
#include "edgeideal/homology.hpp"
#include "edgeideal/structure.hpp"

using namespace edgeideal;

namespace {

// Pinned parameters.
constexpr std::uint64_t kSeed = 20240611;
constexpr std::size_t kCacti = 250;
constexpr std::size_t kCactusVertices = 12;
constexpr std::size_t kPdVertices = 10;
constexpr std::size_t kTamperings = 1000;
constexpr double kLayerTarget = 0.95;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::size_t failures = 0;
  void fail(const std::string& why) {
    if (failures++ == 0) detail = why;
    pass = false;
  }
};

// Every construction built here, for the count >= bight audit.
std::vector<Construction> g_built;

bool verified(const Construction& c) {
  g_built.push_back(c);
  return verify_certificate(c.gens, c.cert).ok;
}

std::string describe(const Graph& g) {
  std::ostringstream os;
  for (const auto& e : g.edges()) os << e.u.label() << "-" << e.v.label() << " ";
  return os.str();
}

Outcome five_cycle_family() {
  Outcome o;
  std::size_t n = 0;
  for (std::size_t r = 0; r <= 4; ++r) {
    for (std::size_t s = 0; r + s <= 4; ++s, ++n) {
      Construction c = gens_lemma52(r, s);
      const std::size_t want = r + s + 3;
      CoverStats st = cover_stats(c.gens.graph);
      if (c.count() != want || !verified(c) || st.height != want || st.big_height != want) {
        o.fail("r=" + std::to_string(r) + " s=" + std::to_string(s));
      }
    }
  }
  if (o.pass) o.detail = std::to_string(n) + " instances, count = hgt = bight = r+s+3";
  return o;
}

Outcome cycles() {
  Outcome o;
  const std::size_t counts[] = {2, 3, 3};
  const std::size_t bights[] = {2, 2, 3};
  for (std::size_t len = 3; len <= 5; ++len) {
    Construction c = gens_cycle(len);
    std::size_t b = big_height(c.gens.graph);
    bool eq_ok = len == 4 ? c.count() == b + 1 : c.count() == b;
    if (!verified(c) || c.count() != counts[len - 3] || b != bights[len - 3] || !eq_ok) {
      o.fail("C" + std::to_string(len));
    }
  }
  if (o.pass) o.detail = "counts 2/3/3, bight 2/2/3, C4 = bight+1";
  return o;
}

Outcome cactus_bound() {
  Outcome o;
  std::mt19937_64 rng(kSeed);
  std::size_t with_pd = 0;
  for (std::size_t i = 0; i < kCacti; ++i) {
    Graph g = random_cactus(rng, kCactusVertices);
    try {
      TraceResult t = theorem34_trace(g);
      CoverStats st = cover_stats(g);
      if (t.bound != st.big_height + cycle_count(g) || t.big_height != st.big_height) {
        o.fail("bound mismatch on " + describe(g));
        continue;
      }
      if (st.height > st.big_height) o.fail("hgt > bight on " + describe(g));
      if (g.num_vertices() <= kPdVertices) {
        ++with_pd;
        std::size_t pd = projective_dimension(g);
        if (st.big_height > pd || pd > t.bound) o.fail("chain broken on " + describe(g));
      }
    } catch (const Error& e) {
      o.fail(std::string(e.what()) + " on " + describe(g));
    }
  }
  if (o.pass) {
    o.detail = std::to_string(kCacti) + " cacti, " + std::to_string(with_pd) + " with pd leg, seed " +
               std::to_string(kSeed);
  }
  return o;
}

Outcome divisible_cycles() {
  Outcome o;
  Graph tw = Graph::from_edges({{"a", "b"}, {"b", "c"}, {"a", "c"}, {"a", "a1"}, {"b", "b1"}});
  BoundReport r = corollary41_bound(tw);
  if (r.improvement_k != 1 || r.bound != 3 || big_height(tw) != 3) o.fail("triangle with two whiskers");
  Graph c6 = cycle_graph(6);
  BoundReport s = corollary41_bound(c6);
  std::size_t b = big_height(c6);
  if (s.improvement_k != 1 || s.bound != b || projective_dimension(c6) != b) o.fail("C6");
  if (o.pass) o.detail = "k=1 bound 3; C6 k=1 bound = bight = pd = " + std::to_string(b);
  return o;
}

std::size_t ara_of(const Attachment& a) {
  if (a.is_whisker()) return 1;
  return a.cycle_length == 3 ? 2 : 3;  // lengths 4 and 5 both need three
}

Outcome attached_cycles() {
  Outcome o;
  const std::vector<Graph> bases = {path_graph(2), path_graph(3), complete_graph(3)};
  const std::vector<Attachment> menu = {Attachment::whisker(), Attachment::cycle(3), Attachment::cycle(5)};
  std::size_t plain = 0, with_c4 = 0;
  for (const Graph& base : bases) {
    const auto& vs = base.vertices();
    std::size_t combos = 1;
    for (std::size_t i = 0; i < vs.size(); ++i) combos *= menu.size();
    for (std::size_t code = 0; code < combos; ++code) {
      std::map<VertexId, Attachment> at;
      std::size_t rest = code, want = 0;
      for (const auto& v : vs) {
        at[v] = menu[rest % menu.size()];
        want += ara_of(at[v]);
        rest /= menu.size();
      }
      ++plain;
      Construction c = gens_prop42(base, at);
      CoverStats st = cover_stats(c.gens.graph);
      if (st.height != st.big_height || !verified(c) || c.count() != want) {
        o.fail("menu " + std::to_string(code) + " on " + describe(base));
      }
      // One C4 in place of each attachment.
      for (const auto& v : vs) {
        auto at4 = at;
        at4[v] = Attachment::cycle(4);
        ++with_c4;
        AttachReport rep = proposition42_bound(base, at4);
        std::size_t b = big_height(rep.built.graph);
        std::size_t pd = projective_dimension(rep.built.graph);
        Construction c4 = gens_prop42(base, at4);
        const std::size_t want4 = want - ara_of(at[v]) + ara_of(at4[v]);
        if (rep.report.bound != b + 1 || pd > rep.report.bound || !verified(c4) || c4.count() != want4 ||
            want4 > rep.report.bound) {
          o.fail("C4 at " + v.label() + " on " + describe(base));
        }
      }
    }
  }
  if (o.pass) {
    o.detail = std::to_string(plain) + " menus STCI, " + std::to_string(with_c4) +
               " with one C4: bound = bight+1 >= pd";
  }
  return o;
}

Outcome chordal_equivalence() {
  Outcome o;
  auto graphs = connected_graphs_up_to(7, small_is_chordal);
  std::size_t n = 0, pure = 0;
  for (const auto& level : graphs) {
    for (const auto& sg : level) {
      Graph g = sg.to_graph();
      ++n;
      bool unmixed = cover_stats(g).unmixed;
      bool partition = simplex_partition_check(g).has_value();
      pure += unmixed;
      if (unmixed != partition) o.fail(describe(g));
    }
  }
  o.detail = std::to_string(n) + " chordal graphs, " + std::to_string(pure) + " pure, " +
             std::to_string(o.failures) + " exceptions";
  return o;
}

Outcome unicyclic_classification() {
  Outcome o;
  auto graphs = connected_graphs_up_to(8, [](const SmallGraph& g) { return small_cycle_rank(g) <= 1; });
  std::size_t n = 0, cm = 0;
  for (const auto& level : graphs) {
    for (const auto& sg : level) {
      if (small_cycle_rank(sg) != 1) continue;
      Graph g = sg.to_graph();
      ++n;
      bool classified = classify_unicyclic(g).status == CmStatus::CM;
      bool oracle = projective_dimension(g) == height(g);
      cm += oracle;
      if (classified != oracle) o.fail(describe(g));
    }
  }
  if (classify_unicyclic(cycle_graph(4)).status != CmStatus::NotCM) o.fail("C4");
  if (classify_unicyclic(cycle_graph(7)).status != CmStatus::NotCM) o.fail("C7");
  for (std::size_t len : {3u, 5u}) {
    if (classify_unicyclic(cycle_graph(len)).case_tag != "unicyclic-case-1") o.fail("C" + std::to_string(len));
  }
  o.detail = std::to_string(n) + " unicyclic graphs, " + std::to_string(cm) + " CM, " +
             std::to_string(o.failures) + " exceptions";
  return o;
}

bool is_seven_cycle(const Graph& g) {
  if (g.num_vertices() != 7 || g.num_edges() != 7 || !g.is_connected()) return false;
  for (const auto& v : g.vertices()) {
    if (g.degree(v) != 2) return false;
  }
  return true;
}

Outcome girth_six_equivalence() {
  Outcome o;
  auto graphs = connected_graphs_up_to(8, [](const SmallGraph& g) {
    std::size_t girth = small_girth(g);
    return girth == 0 || girth >= 6;
  });
  std::size_t n = 0, pure = 0;
  for (const auto& level : graphs) {
    for (const auto& sg : level) {
      Graph g = sg.to_graph();
      if (g.num_edges() <= 1 || is_seven_cycle(g)) continue;
      ++n;
      bool unmixed = cover_stats(g).unmixed;
      bool whisker = is_whisker_graph(g).has_value();
      pure += unmixed;
      if (unmixed != whisker) o.fail(describe(g));
      try {
        corollary61(g);
      } catch (const Error& e) {
        o.fail(std::string(e.what()) + " on " + describe(g));
      }
    }
  }
  o.detail = std::to_string(n) + " graphs, " + std::to_string(pure) + " pure, " + std::to_string(o.failures) +
             " exceptions";
  return o;
}

std::optional<Monomial> unit_monomial(const Polynomial& p) {
  if (!p.is_term()) return std::nullopt;
  const auto& [m, c] = *p.terms().begin();
  if (c != 1 && c != -1) return std::nullopt;
  return m;
}

std::set<VertexId> support(const Monomial& m) {
  std::set<VertexId> vs;
  for (const auto& f : m.factors()) vs.insert(f.first);
  return vs;
}

// Independent check that rho splits the two-term sum: rho is an available
// unit monomial whose support lies in the support of the product of the terms.
bool splitting_holds(const std::vector<Polynomial>& elements, std::size_t available, std::size_t rho,
                     std::size_t sum) {
  if (rho >= available || sum >= available || elements[sum].size() != 2) return false;
  auto m = unit_monomial(elements[rho]);
  if (!m) return false;
  auto it = elements[sum].terms().begin();
  std::set<VertexId> product = support(it->first * std::next(it)->first);
  std::set<VertexId> need = support(*m);
  return std::includes(product.begin(), product.end(), need.begin(), need.end());
}

// Generators followed by every step's outputs.
std::vector<Polynomial> element_list(const GeneratorSet& gs, const Certificate& cert) {
  std::vector<Polynomial> elements = gs.polys;
  for (const auto& step : cert.steps) {
    StepOutcome out = apply_step(elements, step);
    elements.insert(elements.end(), out.established.begin(), out.established.end());
  }
  return elements;
}

// One field of the certificate record changed so that the recorded claim
// changes. Edits that keep the claim (flipping a sign, pointing a reference
// at an element equal up to sign, dropping a step whose outputs are already
// established) are not generated.
bool tamper(std::mt19937_64& rng, const std::vector<Polynomial>& elements, GeneratorSet& gs, Certificate& cert) {
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  auto same = [&](std::size_t a, std::size_t b) {
    return b < elements.size() && (elements[a] == elements[b] || elements[a] == -elements[b]);
  };
  switch (pick(cert.steps.empty() ? 2 : 5)) {
    case 0: {  // generator coefficient
      auto& p = gs.polys[pick(gs.polys.size())];
      auto it = std::next(p.terms().begin(), static_cast<long>(pick(p.size())));
      Monomial m = it->first;
      p += Polynomial(m, 1 + static_cast<std::int64_t>(pick(3)));
      return true;
    }
    case 1: {  // generator exponent
      auto& p = gs.polys[pick(gs.polys.size())];
      auto it = std::next(p.terms().begin(), static_cast<long>(pick(p.size())));
      Monomial m = it->first;
      std::int64_t c = it->second;
      const auto& f = m.factors()[pick(m.factors().size())];
      p -= Polynomial(m, c);
      p += Polynomial(m * Monomial::variable(f.first), c);
      return true;
    }
    case 2: {  // step reference
      const std::size_t at = pick(cert.steps.size());
      Step& s = cert.steps[at];
      std::size_t shift = 1 + pick(3);
      std::size_t* ref = nullptr;
      if (auto* sv = std::get_if<SVStep>(&s)) {
        ref = pick(2) ? &sv->rho_ref : &sv->sum_ref;
      } else if (auto* lin = std::get_if<LinearStep>(&s)) {
        ref = lin->subtract_refs.empty() || pick(2) ? &lin->target_ref : &lin->subtract_refs[pick(lin->subtract_refs.size())];
      } else {
        auto& pw = std::get<PowerStep>(s);
        if (pw.combination.empty()) return false;
        ref = &pw.combination[pick(pw.combination.size())].ref;
      }
      if (same(*ref, *ref + shift)) return false;
      if (auto* sv = std::get_if<SVStep>(&s); sv && ref == &sv->rho_ref) {
        Certificate before{std::vector<Step>(cert.steps.begin(), cert.steps.begin() + static_cast<long>(at))};
        if (splitting_holds(elements, element_list(gs, before).size(), *ref + shift, sv->sum_ref)) return false;
      }
      *ref += shift;
      return true;
    }
    case 3: {  // power or combination coefficient
      Step& s = cert.steps[pick(cert.steps.size())];
      auto* pw = std::get_if<PowerStep>(&s);
      if (!pw) return false;
      if (pick(2) || pw->combination.empty()) {
        pw->k += 1;
      } else {
        auto& coeff = pw->combination[pick(pw->combination.size())].coefficient;
        coeff += Polynomial::constant(1);
      }
      return true;
    }
    default: {  // drop the final step
      const std::size_t produced = elements.size() - element_list(gs, Certificate{std::vector<Step>(
                                                                          cert.steps.begin(), cert.steps.end() - 1)})
                                                                          .size();
      bool redundant = true;
      for (std::size_t i = elements.size() - produced; i < elements.size(); ++i) {
        auto m = unit_monomial(elements[i]);
        bool earlier = false;
        for (std::size_t j = 0; j < elements.size() - produced && m; ++j) {
          earlier = earlier || unit_monomial(elements[j]) == m;
        }
        redundant = redundant && m && earlier;
      }
      if (redundant) return false;
      cert.steps.pop_back();
      return true;
    }
  }
}

Outcome certificate_soundness() {
  Outcome o;
  std::vector<Construction> pool = {gens_cycle(3), gens_cycle(4), gens_cycle(5), gens_lemma52(1, 1),
                                    gens_lemma52(2, 0), gens_lemma52(0, 2)};
  pool.push_back(gens_lemma54(Graph::from_edges({{"x1", "y1"}}), Graph::from_edges({{"x2", "y2"}})));
  pool.push_back(gens_whisker_tree(path_graph(4), Edge(VertexId("x2"), VertexId("x3"))));
  std::map<VertexId, Attachment> at{{VertexId("x1"), Attachment::cycle(5)}, {VertexId("x2"), Attachment::cycle(4)}};
  pool.push_back(gens_prop42(path_graph(2), at));
  for (const auto& c : pool) {
    if (!verified(c)) o.fail("baseline " + c.family + " does not verify");
  }
  std::mt19937_64 rng(kSeed + 9);
  std::size_t done = 0, rejected = 0;
  while (done < kTamperings) {
    const Construction& c = pool[done % pool.size()];
    GeneratorSet gs = c.gens;
    Certificate cert = c.cert;
    if (!tamper(rng, element_list(c.gens, c.cert), gs, cert)) continue;
    if (gs.polys == c.gens.polys && cert == c.cert) continue;
    ++done;
    Verdict v;
    try {
      v = verify_certificate(gs, cert);
    } catch (const Error& e) {
      o.fail(std::string("verifier threw: ") + e.what());
      continue;
    }
    if (v.ok) {
      o.fail("tampered " + c.family + " still verifies");
    } else {
      ++rejected;
    }
  }
  std::size_t below = 0;
  for (const auto& c : g_built) {
    if (verify_certificate(c.gens, c.cert).ok && c.count() < big_height(c.gens.graph)) ++below;
  }
  if (below) o.fail(std::to_string(below) + " verified sets below bight");
  o.detail = std::to_string(rejected) + "/" + std::to_string(done) + " tamperings rejected; " +
             std::to_string(g_built.size()) + " verified sets audited, " + std::to_string(below) + " below bight";
  return o;
}

Outcome forests() {
  Outcome o;
  auto graphs = connected_graphs_up_to(9, [](const SmallGraph& g) { return small_cycle_rank(g) == 0; });
  std::size_t n = 0, layered = 0;
  for (const auto& level : graphs) {
    for (const auto& sg : level) {
      Graph g = sg.to_graph();
      ++n;
      std::size_t b = big_height(g);
      if (projective_dimension(g) != b) o.fail("pd != bight on " + describe(g));
      auto c = sv_layer_search(g, b);
      if (c && verify_certificate(c->gens, c->cert).ok) ++layered;
    }
  }
  double rate = n ? static_cast<double>(layered) / static_cast<double>(n) : 0.0;
  if (rate < kLayerTarget) o.fail("layer success rate below target");
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu trees, pd = bight on all but %zu; layering with bight layers %zu/%zu = %.4f (target %.2f)",
                n, o.failures, layered, n, rate, kLayerTarget);
  o.detail = buf;
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* name;
    Outcome (*run)();
    double limit_s;
  };
  const std::vector<Criterion> criteria = {
      {1, "five-cycle-path-family", five_cycle_family, 30},
      {2, "cycle-generators", cycles, 0},
      {3, "cactus-cycle-bound", cactus_bound, 300},
      {4, "cactus-bound-divisible-cycles", divisible_cycles, 0},
      {5, "attached-cycles-bound", attached_cycles, 0},
      {6, "chordal-purity-simplex-partition", chordal_equivalence, 600},
      {7, "unicyclic-cm-classification", unicyclic_classification, 600},
      {8, "girth-six-whisker-equivalence", girth_six_equivalence, 0},
      {9, "certificate-soundness", certificate_soundness, 0},
      {10, "forest-big-height", forests, 0},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0 && secs > c.limit_s) o.fail("over time limit");
    if (!o.pass) ++failed;
    std::printf("%s %2d %-34s %7.2fs  %s\n", o.pass ? "PASS" : "FAIL", c.number, c.name, secs, o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
