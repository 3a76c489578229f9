#include "edgeideal/generators.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <tuple>

#include "edgeideal/cm_classify.hpp"
#include "edgeideal/covers.hpp"
#include "edgeideal/error.hpp"
#include "edgeideal/structure.hpp"

namespace edgeideal {

namespace {

using Mask = std::uint64_t;

Polynomial em(const VertexId& a, const VertexId& b) { return Polynomial(Monomial::edge(Edge(a, b))); }

Polynomial var(const VertexId& v, std::uint32_t e = 1) { return Polynomial(Monomial::variable(v, e)); }

Monomial mono(std::initializer_list<VertexId> vs) {
  std::vector<Monomial::Factor> f;
  for (const auto& v : vs) f.emplace_back(v, 1);
  return Monomial(std::move(f));
}

std::vector<VertexId> default_labels(std::size_t n, const std::string& prefix) {
  std::vector<VertexId> out;
  for (std::size_t i = 1; i <= n; ++i) out.emplace_back(prefix + std::to_string(i));
  return out;
}

Construction finish(CertificateBuilder& b, std::string family) {
  if (!b.complete()) throw Error(family + ": construction left an edge unestablished");
  Construction c;
  c.gens = b.generators();
  c.cert = b.certificate();
  c.family = std::move(family);
  return c;
}

// (x1x5)² = x1x5·g2 − x1x3·g1 + x3²·x1x2 for g1 = x2x3 + x4x5 and
// g2 = x1x5 + x3x4, once x1x2 is established.
void five_cycle_tail(CertificateBuilder& b, const std::vector<VertexId>& x, std::size_t g1, std::size_t g2) {
  std::size_t e12 = b.ref(mono({x[0], x[1]}));
  std::size_t e15 = b.power(mono({x[0], x[4]}), 2,
                            {{Polynomial(mono({x[0], x[4]})), g2},
                             {-Polynomial(mono({x[0], x[2]})), g1},
                             {var(x[2], 2), e12}});
  std::size_t e34 = b.linear(g2, {e15});
  b.sv(e34, g1);
}

using Path = std::pair<VertexId, VertexId>;

// Five-cycle x[0..4] with paths x1-a-b (at_x1) and x3-c-d (at_x3).
Construction five_cycle_with_paths(const std::vector<VertexId>& x, const std::vector<Path>& at_x1,
                                   const std::vector<Path>& at_x3) {
  if (at_x1.empty() && at_x3.empty()) return gens_cycle(5, x);
  if (at_x1.empty()) {
    // Mirror through x2: x1 <-> x3 and x4 <-> x5.
    std::vector<VertexId> m{x[2], x[1], x[0], x[4], x[3]};
    Construction c = five_cycle_with_paths(m, at_x3, {});
    c.family = "lemma52";
    return c;
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < 5; ++i) edges.emplace_back(x[i], x[(i + 1) % 5]);
  for (const auto& [a, bb] : at_x1) {
    edges.emplace_back(x[0], a);
    edges.emplace_back(a, bb);
  }
  for (const auto& [c, d] : at_x3) {
    edges.emplace_back(x[2], c);
    edges.emplace_back(c, d);
  }
  GeneratorSet gs;
  gs.graph = Graph::from_edges(std::span<const Edge>(edges));
  const std::size_t r = at_x1.size(), s = at_x3.size();
  const VertexId &ar = at_x1.back().first, &br = at_x1.back().second;
  std::vector<std::size_t> chain;
  gs.polys.push_back(em(x[0], at_x1[0].first));
  chain.push_back(0);
  for (std::size_t i = 0; i + 1 < r; ++i) {
    gs.polys.push_back(em(x[0], at_x1[i + 1].first) + em(at_x1[i].first, at_x1[i].second));
    chain.push_back(gs.polys.size() - 1);
  }
  if (s == 0) {
    gs.polys.push_back(em(x[0], x[1]) + em(ar, br));
    chain.push_back(gs.polys.size() - 1);
    gs.polys.push_back(em(x[1], x[2]) + em(x[3], x[4]));
    gs.polys.push_back(em(x[0], x[4]) + em(x[2], x[3]));
    const std::size_t g1 = gs.polys.size() - 2, g2 = gs.polys.size() - 1;
    CertificateBuilder b(gs);
    b.saturate(chain);
    five_cycle_tail(b, x, g1, g2);
    return finish(b, "lemma52");
  }
  const std::size_t p1 = gs.polys.size();
  gs.polys.push_back(em(x[0], x[1]) + em(ar, br) + em(x[3], x[4]));
  const std::size_t p2 = gs.polys.size();
  gs.polys.push_back(em(x[0], x[4]) + em(x[1], x[2]) + Polynomial(mono({ar, x[3], x[4]})));
  gs.polys.push_back(em(x[2], at_x3[0].first));
  for (std::size_t i = 0; i + 1 < s; ++i) {
    gs.polys.push_back(em(x[2], at_x3[i + 1].first) + em(at_x3[i].first, at_x3[i].second));
  }
  gs.polys.push_back(em(at_x3.back().first, at_x3.back().second) + em(x[2], x[3]));
  CertificateBuilder b(gs);
  b.saturate();
  // x1²x2 − a_r x4²x5 = −b_r·x1a_r + x1·p1 − x4·p2 + x2·x3x4.
  const std::size_t e1a = b.ref(mono({x[0], ar})), e34 = b.ref(mono({x[2], x[3]}));
  const std::vector<Summand> identity{
      {-var(br), e1a}, {var(x[0]), p1}, {-var(x[3]), p2}, {var(x[1]), e34}};
  b.isolate(identity, Monomial({{x[0], 2}, {x[1], 1}}));
  b.isolate(identity, Monomial({{ar, 1}, {x[3], 2}, {x[4], 1}}));
  b.saturate();
  return finish(b, "lemma52");
}

std::vector<Path> standard_paths(std::size_t n, const std::string& p, const std::string& q) {
  std::vector<Path> out;
  for (std::size_t i = 1; i <= n; ++i) out.emplace_back(p + std::to_string(i), q + std::to_string(i));
  return out;
}

// Index of the generator equal to the edge monomial e.
std::size_t generator_of(const Construction& c, const Edge& e) {
  Polynomial target(Monomial::edge(e));
  for (std::size_t i = 0; i < c.gens.polys.size(); ++i) {
    if (c.gens.polys[i] == target) return i;
  }
  throw Error("edge " + to_string(e) + " is not a standalone generator");
}

// Assembles parts into one construction. Each part after the first may name
// one of its standalone edge generators as shared: it is dropped and mapped
// onto the element the earlier parts establish.
struct Part {
  Construction c;
  std::optional<Edge> shared;
};

Construction assemble(const std::vector<Part>& parts, std::string family) {
  GeneratorSet gs;
  Graph g;
  std::vector<std::vector<std::optional<std::size_t>>> where(parts.size());
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const auto& c = parts[p].c;
    g = graph_union(g, c.gens.graph);
    std::optional<std::size_t> drop;
    if (parts[p].shared) drop = generator_of(c, *parts[p].shared);
    for (std::size_t i = 0; i < c.gens.polys.size(); ++i) {
      if (drop && *drop == i) {
        where[p].push_back(std::nullopt);
      } else {
        where[p].push_back(gs.polys.size());
        gs.polys.push_back(c.gens.polys[i]);
      }
    }
  }
  gs.graph = g;
  CertificateBuilder b(gs);
  for (std::size_t p = 0; p < parts.size(); ++p) {
    std::vector<std::size_t> map;
    for (const auto& w : where[p]) map.push_back(w ? *w : b.ref(Monomial::edge(*parts[p].shared)));
    b.replay(parts[p].c.cert, parts[p].c.gens.polys.size(), map);
  }
  return finish(b, std::move(family));
}

// Pair masks: cover[i][j] has bit k when edge k lies inside e_i ∪ e_j.
std::vector<std::vector<Mask>> pair_cover(const std::vector<Edge>& es) {
  std::vector<std::vector<Mask>> cover(es.size(), std::vector<Mask>(es.size(), 0));
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j = 0; j < es.size(); ++j) {
      VertexSet u{es[i].u, es[i].v, es[j].u, es[j].v};
      for (std::size_t k = 0; k < es.size(); ++k) {
        if (u.count(es[k].u) && u.count(es[k].v)) cover[i][j] |= Mask{1} << k;
      }
    }
  }
  return cover;
}

// Fixed point of term extraction over groups of edges.
using Ends = std::vector<std::array<std::size_t, 2>>;

Ends edge_ends(const std::vector<Edge>& es) {
  std::map<VertexId, std::size_t> index;
  Ends ends;
  for (const auto& e : es) {
    auto u = index.try_emplace(e.u, index.size()).first->second;
    auto v = index.try_emplace(e.v, index.size()).first->second;
    ends.push_back({u, v});
  }
  return ends;
}

// Edges dividing (mu·t / q)·p, or nullopt when q does not divide mu·t.
std::optional<Mask> cross_cover(const Ends& ends, std::size_t mu, std::size_t t, std::size_t q,
                                std::size_t p) {
  std::array<std::pair<std::size_t, int>, 6> count{};
  std::size_t used = 0;
  auto slot = [&](std::size_t v) -> int& {
    for (std::size_t i = 0; i < used; ++i) {
      if (count[i].first == v) return count[i].second;
    }
    count[used] = {v, 0};
    return count[used++].second;
  };
  for (std::size_t e : {mu, t}) {
    ++slot(ends[e][0]);
    ++slot(ends[e][1]);
  }
  for (std::size_t v : ends[q]) {
    if (--slot(v) < 0) return std::nullopt;
  }
  ++slot(ends[p][0]);
  ++slot(ends[p][1]);
  auto present = [&](std::size_t v) {
    for (std::size_t i = 0; i < used; ++i) {
      if (count[i].first == v) return count[i].second > 0;
    }
    return false;
  };
  Mask out = 0;
  for (std::size_t k = 0; k < ends.size(); ++k) {
    if (present(ends[k][0]) && present(ends[k][1])) out |= Mask{1} << k;
  }
  return out;
}

bool extraction_closes(const std::vector<Mask>& groups, const std::vector<std::vector<Mask>>& cover,
                       const Ends& ends, Mask all) {
  Mask est = 0;
  for (Mask gr : groups) {
    if (std::popcount(gr) == 1) est |= gr;
  }
  bool progress = true;
  while (progress && est != all) {
    progress = false;
    for (Mask gr : groups) {
      Mask rest = gr & ~est;
      if (!rest) continue;
      if (std::popcount(rest) == 1) {
        est |= rest;
        progress = true;
        continue;
      }
      for (Mask m = rest; m; m &= m - 1) {
        const int mu = std::countr_zero(m);
        bool ok = true;
        for (Mask t = rest & ~(Mask{1} << mu); t && ok; t &= t - 1) {
          ok = (cover[mu][std::countr_zero(t)] & est) != 0;
        }
        if (ok) {
          est |= Mask{1} << mu;
          progress = true;
          break;
        }
      }
    }
    if (progress) continue;
    std::vector<Mask> binomials;
    for (Mask gr : groups) {
      if (std::popcount(gr & ~est) == 2) binomials.push_back(gr & ~est);
    }
    for (std::size_t i = 0; i < binomials.size() && !progress; ++i) {
      for (std::size_t j = 0; j < binomials.size() && !progress; ++j) {
        if (i == j) continue;
        const std::size_t a = std::countr_zero(binomials[i]);
        const std::size_t b = std::countr_zero(binomials[i] & (binomials[i] - 1));
        const std::size_t c = std::countr_zero(binomials[j]);
        const std::size_t d = std::countr_zero(binomials[j] & (binomials[j] - 1));
        for (auto [mu, t] : {std::pair{c, d}, std::pair{d, c}}) {
          for (auto [q, p] : {std::pair{a, b}, std::pair{b, a}}) {
            auto hit = cross_cover(ends, mu, t, q, p);
            if (hit && (*hit & est)) {
              est |= Mask{1} << mu;
              progress = true;
            }
            if (progress) break;
          }
          if (progress) break;
        }
      }
    }
  }
  return est == all;
}

Construction from_groups(const Graph& h, const std::vector<Edge>& es, const std::vector<Mask>& groups,
                         std::string family) {
  GeneratorSet gs;
  gs.graph = h;
  for (Mask gr : groups) {
    std::vector<Edge> part;
    for (Mask m = gr; m; m &= m - 1) part.push_back(es[std::countr_zero(m)]);
    gs.polys.push_back(edge_sum(part));
  }
  CertificateBuilder b(gs);
  b.saturate();
  return finish(b, std::move(family));
}

std::vector<Edge> edges_from(const Graph& h, const std::optional<Edge>& anchor) {
  std::vector<Edge> es = h.edges();
  if (!anchor) return es;
  // Breadth-first from the anchor so nearby edges are grouped first.
  std::vector<Edge> out{*anchor};
  std::set<Edge> seen{*anchor};
  std::deque<VertexId> queue{anchor->u, anchor->v};
  VertexSet visited{anchor->u, anchor->v};
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (const auto& w : h.neighbors(v)) {
      Edge e(v, w);
      if (seen.insert(e).second) out.push_back(e);
      if (visited.insert(w).second) queue.push_back(w);
    }
  }
  for (const auto& e : es) {
    if (seen.insert(e).second) out.push_back(e);
  }
  return out;
}

}  // namespace

Construction gens_cycle(std::size_t length, std::vector<VertexId> labels) {
  if (length < 3 || length > 5) {
    throw InvalidArgument("explicit cycle generators exist for lengths 3, 4 and 5 only");
  }
  if (labels.empty()) labels = default_labels(length, "x");
  if (labels.size() != length) throw InvalidArgument("need one label per cycle vertex");
  if (VertexSet(labels.begin(), labels.end()).size() != length) throw InvalidArgument("repeated cycle label");
  const auto& x = labels;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < length; ++i) edges.emplace_back(x[i], x[(i + 1) % length]);
  GeneratorSet gs;
  gs.graph = Graph::from_edges(std::span<const Edge>(edges));
  if (length == 3) {
    gs.polys = {em(x[0], x[1]), em(x[1], x[2]) + em(x[0], x[2])};
    CertificateBuilder b(gs);
    b.sv(0, 1);
    return finish(b, "cycle");
  }
  if (length == 4) {
    gs.polys = {em(x[0], x[1]), em(x[0], x[3]) + em(x[1], x[2]), em(x[2], x[3])};
    CertificateBuilder b(gs);
    b.sv(0, 1);
    return finish(b, "cycle");
  }
  gs.polys = {em(x[0], x[1]), em(x[1], x[2]) + em(x[3], x[4]), em(x[0], x[4]) + em(x[2], x[3])};
  CertificateBuilder b(gs);
  five_cycle_tail(b, x, 1, 2);
  return finish(b, "cycle");
}

Graph lemma52_graph(std::size_t r, std::size_t s) { return gens_lemma52(r, s).gens.graph; }

Construction gens_lemma52(std::size_t r, std::size_t s) {
  Construction c = five_cycle_with_paths(default_labels(5, "x"), standard_paths(r, "a", "b"),
                                         standard_paths(s, "c", "d"));
  c.family = "lemma52";
  return c;
}

namespace {

// Five-cycle x with paths and with trees hung at x[0] and x[2].
Construction five_cycle_with_trees(const std::vector<VertexId>& x, std::vector<Path> paths1,
                                   std::vector<Path> paths3, const std::vector<Graph>& at_x1,
                                   const std::vector<Graph>& at_x3) {
  VertexSet taken(x.begin(), x.end());
  for (const auto& p : paths1) taken.insert({p.first, p.second});
  for (const auto& p : paths3) taken.insert({p.first, p.second});

  struct Hung {
    Graph bar;
    Edge anchor;
  };
  std::vector<Hung> spliced;
  std::vector<Graph> trees;
  auto take = [&](const std::vector<Graph>& list, const VertexId& root, std::vector<Path>& paths) {
    for (const auto& l : list) {
      const char* who = tags::kFiveCyclePaths;
      if (!l.has_vertex(root)) throw HypothesisError(who, "attachment misses its root " + root.label());
      if (!is_tree(l)) throw HypothesisError(who, "attachment is not a tree");
      if (l.degree(root) != 1) throw HypothesisError(who, "root must have exactly one neighbour in the attachment");
      for (const auto& v : l.vertices()) {
        if (v != root && !taken.insert(v).second) {
          throw HypothesisError(who, "attachment vertex " + v.label() + " is already used");
        }
      }
      const VertexId e = l.neighbors(root).front();
      const Graph bar = l.without_vertex(root);
      if (!is_whisker_tree(bar)) throw HypothesisError(who, "attachment minus its root is not a whisker tree");
      if (bar.degree(e) >= 2) {
        std::optional<VertexId> f;
        for (const auto& w : bar.neighbors(e)) {
          if (bar.degree(w) >= 2) {
            f = w;
            break;
          }
        }
        paths.emplace_back(e, *f);
        spliced.push_back({bar, Edge(e, *f)});
      } else {
        trees.push_back(l);
      }
    }
  };
  take(at_x1, x[0], paths1);
  take(at_x3, x[2], paths3);

  std::vector<Part> parts{{five_cycle_with_paths(x, paths1, paths3), std::nullopt}};
  for (const auto& h : spliced) parts.push_back({gens_whisker_tree(h.bar, h.anchor), h.anchor});
  for (const auto& t : trees) {
    auto c = partition_search(t, big_height(t));
    if (!c) throw Error("no generator set of big-height size found for an attached tree");
    parts.push_back({*c, std::nullopt});
  }
  return assemble(parts, "lemma53");
}

}  // namespace

Construction gens_lemma53(std::size_t r, std::size_t s, const std::vector<Graph>& at_x1,
                          const std::vector<Graph>& at_x3) {
  return five_cycle_with_trees(default_labels(5, "x"), standard_paths(r, "a", "b"),
                               standard_paths(s, "c", "d"), at_x1, at_x3);
}

namespace {

Construction four_cycle_with_trees(const std::vector<VertexId>& x, const Graph& h1, const Graph& h2) {
  const char* who = tags::kFourCycleTrees;
  if (h1.empty() || h2.empty()) throw HypothesisError(who, "both attached trees must be nonempty");
  if (!h1.has_vertex(x[0]) || !h2.has_vertex(x[1])) {
    throw HypothesisError(who, "trees must contain " + x[0].label() + " and " + x[1].label());
  }
  if (!is_tree(h1) || !is_tree(h2)) throw HypothesisError(who, "attachments must be trees");
  for (const auto& v : h1.vertices()) {
    if (v == x[1] || v == x[2] || v == x[3] || h2.has_vertex(v)) {
      throw HypothesisError(who, "attached trees overlap the cycle or each other at " + v.label());
    }
  }
  for (const auto& v : h2.vertices()) {
    if (v == x[0] || v == x[2] || v == x[3]) throw HypothesisError(who, "tree at x2 meets the cycle at " + v.label());
  }
  Graph h = graph_union(h1, h2).with_edges(std::vector<Edge>{Edge(x[0], x[1])});
  if (!is_whisker_tree(h)) throw HypothesisError(who, "h1 + x1x2 + h2 is not a whisker tree");
  auto pick = [&](const Graph& t, const VertexId& xi) {
    if (t.num_edges() == 1) return t.neighbors(xi).front();
    for (const auto& w : t.neighbors(xi)) {
      if (t.degree(w) >= 2) return w;
    }
    throw HypothesisError(who, xi.label() + " has no non-terminal neighbour in its tree");
  };
  const VertexId y1 = pick(h1, x[0]), y2 = pick(h2, x[1]);

  GeneratorSet s0;
  std::vector<Edge> base{{x[0], x[1]}, {x[1], x[2]}, {x[2], x[3]}, {x[3], x[0]}, {x[0], y1}, {x[1], y2}};
  s0.graph = Graph::from_edges(std::span<const Edge>(base));
  s0.polys = {em(x[0], x[1]), em(x[0], x[3]) + em(x[1], x[2]), em(x[2], x[3]) + em(x[0], y1) + em(x[1], y2)};
  CertificateBuilder b(s0);
  b.saturate();
  std::vector<Part> parts{{finish(b, "lemma54"), std::nullopt}};
  for (const auto& [t, xi, yi] : {std::tuple{h1, x[0], y1}, std::tuple{h2, x[1], y2}}) {
    if (t.num_edges() == 1) continue;
    Edge anchor(xi, yi);
    parts.push_back({gens_whisker_tree(t, anchor), anchor});
  }
  return assemble(parts, "lemma54");
}

}  // namespace

Construction gens_lemma54(const Graph& h1, const Graph& h2) {
  return four_cycle_with_trees(default_labels(4, "x"), h1, h2);
}

Construction gens_whisker_tree(const Graph& t, const Edge& anchor, std::size_t budget) {
  if (!is_whisker_tree(t)) throw InvalidArgument("graph is not a whisker tree");
  if (!t.has_edge(anchor)) throw InvalidArgument("anchor " + to_string(anchor) + " is not an edge");
  if (t.degree(anchor.u) < 2 || t.degree(anchor.v) < 2) {
    throw InvalidArgument("anchor " + to_string(anchor) + " is a terminal edge");
  }
  const std::size_t n = t.num_vertices() / 2;
  auto c = partition_search(t, n, anchor, budget);
  if (!c) throw Error("no whisker tree generator set of size " + std::to_string(n) + " found");
  c->family = "whisker";
  return *c;
}

std::optional<Construction> partition_search(const Graph& g, std::size_t count,
                                             std::optional<Edge> anchor, std::size_t budget) {
  const Graph h = g.drop_isolated();
  const std::size_t m = h.num_edges();
  if (m > 63) throw SizeLimitError("partition search handles at most 63 edges");
  if (anchor && !h.has_edge(*anchor)) throw InvalidArgument("anchor is not an edge");
  if (m == 0) {
    if (count != 0) return std::nullopt;
    Construction c;
    c.gens.graph = h;
    c.family = "partition";
    return c;
  }
  if (count == 0 || count > m) return std::nullopt;
  const std::vector<Edge> es = edges_from(h, anchor);
  const auto cover = pair_cover(es);
  const auto ends = edge_ends(es);
  const Mask all = m == 64 ? ~Mask{0} : (Mask{1} << m) - 1;
  std::vector<Mask> groups;
  std::size_t first = 0;
  if (anchor) {
    groups.push_back(Mask{1});
    first = 1;
  }
  const std::size_t fixed = groups.size();
  std::size_t spent = 0;
  std::optional<std::vector<Mask>> found;
  std::function<void(std::size_t)> place = [&](std::size_t k) {
    if (found) return;
    const std::size_t open = groups.size() - fixed;
    const std::size_t want = count - fixed;
    if (k == m) {
      if (open != want) return;
      if (++spent > budget) throw SearchBudgetExceeded("partition search budget exhausted");
      if (extraction_closes(groups, cover, ends, all)) found = groups;
      return;
    }
    if (m - k < want - open) return;
    for (std::size_t gi = fixed; gi < groups.size() && !found; ++gi) {
      groups[gi] |= Mask{1} << k;
      place(k + 1);
      groups[gi] &= ~(Mask{1} << k);
    }
    if (!found && open < want) {
      groups.push_back(Mask{1} << k);
      place(k + 1);
      groups.pop_back();
    }
  };
  if (count == fixed) {
    if (m == 1) found = groups;
  } else {
    place(first);
  }
  if (!found) return std::nullopt;
  return from_groups(h, es, *found, "partition");
}

std::optional<Construction> sv_layer_search(const Graph& g, std::size_t max_layers, std::size_t budget) {
  const Graph h = g.drop_isolated();
  const std::size_t m = h.num_edges();
  if (m > 63) throw SizeLimitError("layer search handles at most 63 edges");
  if (m == 0) {
    Construction c;
    c.gens.graph = h;
    c.family = "svsearch";
    return c;
  }
  const std::vector<Edge> es = h.edges();
  const auto cover = pair_cover(es);
  const Mask all = (Mask{1} << m) - 1;
  std::size_t spent = 0;
  std::vector<Mask> layers;

  // Maximal sets of remaining edges whose pairwise products are covered by `est`.
  auto maximal_layers = [&](Mask remaining, Mask est) {
    std::vector<Mask> out;
    std::function<void(Mask, Mask, Mask)> bk = [&](Mask r, Mask p, Mask x) {
      if (!p && !x) {
        out.push_back(r);
        return;
      }
      for (Mask q = p; q; q &= q - 1) {
        const int v = std::countr_zero(q);
        if (!(p >> v & 1)) continue;
        Mask nb = 0;
        for (Mask t = remaining & ~(Mask{1} << v); t; t &= t - 1) {
          const int w = std::countr_zero(t);
          if (cover[v][w] & est) nb |= Mask{1} << w;
        }
        bk(r | (Mask{1} << v), p & nb, x & nb);
        p &= ~(Mask{1} << v);
        x |= Mask{1} << v;
      }
    };
    bk(0, remaining, 0);
    std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
      return std::popcount(a) != std::popcount(b) ? std::popcount(a) > std::popcount(b) : a < b;
    });
    return out;
  };

  std::function<bool(Mask, Mask, std::size_t)> dfs = [&](Mask remaining, Mask est, std::size_t limit) {
    if (!remaining) return true;
    if (layers.size() == limit || ++spent > budget) return false;
    std::vector<Mask> options;
    if (layers.empty()) {
      for (Mask t = remaining; t; t &= t - 1) options.push_back(t & -t);
    } else {
      options = maximal_layers(remaining, est);
    }
    for (Mask layer : options) {
      layers.push_back(layer);
      if (dfs(remaining & ~layer, est | layer, limit)) return true;
      layers.pop_back();
    }
    return false;
  };
  for (std::size_t limit = 1; limit <= max_layers && spent <= budget; ++limit) {
    layers.clear();
    if (dfs(all, 0, limit)) return from_groups(h, es, layers, "svsearch");
  }
  return std::nullopt;
}

Construction gens_prop42(const Graph& base, const std::map<VertexId, Attachment>& attachments) {
  for (const auto& [v, a] : attachments) {
    if (!a.is_whisker() && (a.cycle_length < 3 || a.cycle_length > 5)) {
      throw InvalidArgument("explicit generators cover attached cycles of length 3, 4 and 5 only");
    }
  }
  AttachedGraph built = attach(base, attachments);
  std::vector<Edge> whisker_edges = base.edges();
  for (const auto& [v, seq] : built.attached) whisker_edges.emplace_back(v, seq[1]);
  Graph whiskered = Graph::from_edges(std::span<const Edge>(whisker_edges));
  auto s0 = partition_search(whiskered, base.num_vertices());
  if (!s0) throw Error("no whisker graph generator set of size n found");
  std::vector<Part> parts{{*s0, std::nullopt}};
  for (const auto& [v, seq] : built.attached) {
    const Attachment& a = attachments.at(v);
    if (a.is_whisker()) continue;
    parts.push_back({gens_cycle(a.cycle_length, seq), Edge(seq[0], seq[1])});
  }
  Construction c = assemble(parts, "prop42");
  c.gens.graph = built.graph;
  return c;
}

std::optional<Construction> gens_unicyclic(const Graph& g) {
  auto m = match_unicyclic(g);
  if (!m) return std::nullopt;
  const Cycle& c = m->cycle;
  switch (m->case_number) {
    case 1:
      return gens_cycle(c.length(), c.vertices);
    case 2:
      return partition_search(g, g.num_vertices() / 2);
    case 3:
      return partition_search(g, height(g));
    case 4: {
      // x1 and x3 carry everything; x2 is the cycle vertex between them.
      std::size_t start = 0;
      for (std::size_t i = 0; i < 5; ++i) {
        if (g.degree(c.vertices[i]) > 2) {
          start = i;
          break;
        }
      }
      std::vector<VertexId> x;
      for (std::size_t i = 0; i < 5; ++i) x.push_back(c.vertices[(start + i) % 5]);
      if (g.degree(x[2]) <= 2 && g.degree(x[3]) > 2) {
        std::vector<VertexId> rev{x[0], x[4], x[3], x[2], x[1]};
        x = rev;
      }
      VertexSet rest = g.vertex_set();
      for (const auto& v : x) rest.erase(v);
      const Graph outside = g.induced_subgraph(rest);
      std::vector<Path> paths1, paths3;
      std::vector<Graph> trees1, trees3;
      for (const auto& comp : outside.connected_components()) {
        std::optional<VertexId> root, entry;
        for (const auto& v : comp) {
          for (const auto& w : g.neighbors(v)) {
            if (!comp.count(w)) {
              root = w;
              entry = v;
            }
          }
        }
        if (*root != x[0] && *root != x[2]) throw Error("five-cycle attachment at an unexpected vertex");
        Graph h = outside.induced_subgraph(comp);
        if (h.num_edges() == 1) {
          (*root == x[0] ? paths1 : paths3).emplace_back(*entry, h.neighbors(*entry).front());
        } else {
          (*root == x[0] ? trees1 : trees3).push_back(h.with_edges(std::vector<Edge>{Edge(*root, *entry)}));
        }
      }
      return five_cycle_with_trees(x, paths1, paths3, trees1, trees3);
    }
    case 5:
      return four_cycle_with_trees(m->labelled, m->h1, m->h2);
  }
  return std::nullopt;
}

Construction relabel(const Construction& c, const std::map<VertexId, VertexId>& names) {
  auto name = [&](const VertexId& v) {
    auto it = names.find(v);
    return it == names.end() ? v : it->second;
  };
  auto mono_map = [&](const Monomial& m) {
    std::vector<Monomial::Factor> f;
    for (const auto& [v, e] : m.factors()) f.emplace_back(name(v), e);
    return Monomial(std::move(f));
  };
  auto poly_map = [&](const Polynomial& p) {
    Polynomial out;
    for (const auto& [m, k] : p.terms()) out += Polynomial(mono_map(m), k);
    return out;
  };
  Construction out;
  out.family = c.family;
  out.gens.graph = c.gens.graph.relabeled(names);
  for (const auto& p : c.gens.polys) out.gens.polys.push_back(poly_map(p));
  for (const auto& step : c.cert.steps) {
    if (const auto* pw = std::get_if<PowerStep>(&step)) {
      PowerStep q{mono_map(pw->target), pw->k, {}};
      for (const auto& s : pw->combination) q.combination.push_back({poly_map(s.coefficient), s.ref});
      out.cert.steps.push_back(std::move(q));
    } else {
      out.cert.steps.push_back(step);
    }
  }
  return out;
}

}  // namespace edgeideal
