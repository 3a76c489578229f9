#include "edgeideal/covers.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>

#include "edgeideal/error.hpp"

namespace edgeideal {

bool is_vertex_cover(const Graph& g, const VertexSet& s) {
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const Edge& e) { return s.count(e.u) || s.count(e.v); });
}

bool is_minimal_vertex_cover(const Graph& g, const VertexSet& s) {
  if (!is_vertex_cover(g, s)) return false;
  for (const auto& v : s) {
    if (!g.has_vertex(v)) return false;
    auto nb = g.neighbors(v);
    bool has_private_edge =
        std::any_of(nb.begin(), nb.end(), [&](const VertexId& w) { return !s.count(w); });
    if (!has_private_edge) return false;
  }
  return true;
}

MinimalCover::MinimalCover(Graph host, VertexSet vertices)
    : host_(std::move(host)), vertices_(std::move(vertices)) {
  if (!is_minimal_vertex_cover(host_, vertices_)) {
    throw InvalidArgument(to_string(vertices_) + " is not a minimal vertex cover");
  }
}

std::vector<MinimalCover> enumerate_minimal_covers(const Graph& g, const CoverOptions& options) {
  std::vector<VertexId> active;
  for (const auto& v : g.vertices()) {
    if (g.degree(v) > 0) active.push_back(v);
  }
  const std::size_t limit = std::min<std::size_t>(options.max_vertices, 64);
  if (active.size() > limit) {
    throw SizeLimitError("cover enumeration refuses " + std::to_string(active.size()) +
                         " non-isolated vertices (limit " + std::to_string(limit) + ")");
  }
  const std::size_t k = active.size();
  const std::uint64_t all = k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
  std::vector<std::uint64_t> non_adjacent(k);
  for (std::size_t i = 0; i < k; ++i) {
    std::uint64_t adj = 0;
    for (const auto& w : g.neighbors(active[i])) {
      auto j = std::lower_bound(active.begin(), active.end(), w) - active.begin();
      adj |= std::uint64_t{1} << j;
    }
    non_adjacent[i] = all & ~adj & ~(std::uint64_t{1} << i);
  }

  // Maximal independent sets are the maximal cliques of the complement;
  // Bron–Kerbosch with Tomita pivoting.
  std::vector<std::uint64_t> independent;
  std::function<void(std::uint64_t, std::uint64_t, std::uint64_t)> expand =
      [&](std::uint64_t r, std::uint64_t p, std::uint64_t x) {
        if (p == 0 && x == 0) {
          independent.push_back(r);
          return;
        }
        std::uint64_t px = p | x;
        int pivot = std::countr_zero(px);
        int best = -1;
        for (std::uint64_t m = px; m; m &= m - 1) {
          int u = std::countr_zero(m);
          int score = std::popcount(p & non_adjacent[u]);
          if (score > best) {
            best = score;
            pivot = u;
          }
        }
        for (std::uint64_t m = p & ~non_adjacent[pivot]; m; m &= m - 1) {
          int v = std::countr_zero(m);
          std::uint64_t bit = std::uint64_t{1} << v;
          expand(r | bit, p & non_adjacent[v], x & non_adjacent[v]);
          p &= ~bit;
          x |= bit;
        }
      };
  expand(0, all, 0);

  std::vector<MinimalCover> covers;
  covers.reserve(independent.size());
  for (std::uint64_t r : independent) {
    VertexSet cover;
    for (std::uint64_t m = all & ~r; m; m &= m - 1) cover.insert(active[std::countr_zero(m)]);
    covers.push_back(MinimalCover(MinimalCover::Trusted{}, g, std::move(cover)));
  }
  std::sort(covers.begin(), covers.end(), [](const MinimalCover& a, const MinimalCover& b) {
    return a.vertices() < b.vertices();
  });
  return covers;
}

CoverStats cover_stats(const Graph& g, const CoverOptions& options) {
  CoverStats stats;
  stats.all_covers = enumerate_minimal_covers(g, options);
  stats.height = stats.all_covers.front().size();
  stats.big_height = stats.height;
  for (const auto& c : stats.all_covers) {
    stats.height = std::min(stats.height, c.size());
    stats.big_height = std::max(stats.big_height, c.size());
  }
  stats.unmixed = stats.height == stats.big_height;
  return stats;
}

std::size_t height(const Graph& g) { return cover_stats(g).height; }
std::size_t big_height(const Graph& g) { return cover_stats(g).big_height; }

std::vector<MinimalCover> maximum_covers(const Graph& g) {
  auto stats = cover_stats(g);
  std::vector<MinimalCover> out;
  for (auto& c : stats.all_covers) {
    if (c.size() == stats.big_height) out.push_back(std::move(c));
  }
  return out;
}

bool in_every_maximum_cover(const Graph& g, const VertexId& x) {
  if (!g.has_vertex(x)) return false;
  auto maxima = maximum_covers(g);
  return std::all_of(maxima.begin(), maxima.end(),
                     [&](const MinimalCover& c) { return c.contains(x); });
}

bool is_redundant_neighbor(const Graph& g, const MinimalCover& c, const VertexId& x,
                           const VertexId& y) {
  if (!(c.host() == g)) throw InvalidArgument("cover belongs to a different graph");
  if (c.contains(x)) throw InvalidArgument(x.label() + " must lie outside the cover");
  if (!g.has_edge(x, y)) throw InvalidArgument(y.label() + " is not a neighbour of " + x.label());
  for (const auto& w : g.neighbors(y)) {
    if (w != x && !c.contains(w)) return false;
  }
  return true;
}

bool redundancy_remark_check(const Graph& g, const MinimalCover& c, const VertexId& x,
                             const VertexId& y) {
  bool redundant = is_redundant_neighbor(g, c, x, y);
  const Edge xy(x, y);
  Graph reduced = g.without_edges(std::span<const Edge>(&xy, 1));
  VertexSet smaller = c.vertices();
  smaller.erase(y);
  bool minimal_after_removal = is_minimal_vertex_cover(reduced, smaller);
  return redundant == minimal_after_removal;
}

VertexSet induced_cover(const MinimalCover& c, const Graph& h) {
  if (!c.host().contains_subgraph(h)) {
    throw InvalidArgument("induced cover requires a subgraph of the cover's host");
  }
  VertexSet out;
  for (const auto& v : h.vertices()) {
    if (c.contains(v)) out.insert(v);
  }
  return out;
}

bool glued_at(const Graph& g, const Graph& g1, const VertexId& x) {
  if (!g.contains_subgraph(g1)) return false;
  Graph rest = graph_difference(g, g1);
  VertexSet common;
  for (const auto& v : g1.vertices()) {
    if (rest.has_vertex(v)) common.insert(v);
  }
  return common == VertexSet{x};
}

bool lemma26_check(const Graph& g, const Graph& g1, const VertexId& x) {
  constexpr const char* kResult = "induced-cover inequality";
  if (!glued_at(g, g1, x)) {
    throw HypothesisError(kResult, "subgraph does not meet the rest of the graph exactly in " +
                                        x.label());
  }
  if (!in_every_maximum_cover(g1, x)) {
    throw HypothesisError(kResult, x.label() + " avoids some maximum minimal cover of the subgraph");
  }
  const std::size_t b1 = big_height(g1);
  for (const auto& c : maximum_covers(g)) {
    std::size_t d1 = induced_cover(c, g1).size();
    if (d1 > b1) return false;
    if (c.contains(x) && d1 != b1) return false;
  }
  return true;
}

namespace {

bool shares_exactly(const Graph& g1, const Graph& g2, const VertexId& x) {
  VertexSet common;
  for (const auto& v : g1.vertices()) {
    if (g2.has_vertex(v)) common.insert(v);
  }
  return common == VertexSet{x};
}

bool has_redundant_neighbor(const Graph& g, const MinimalCover& c, const VertexId& x) {
  for (const auto& y : g.neighbors(x)) {
    if (is_redundant_neighbor(g, c, x, y)) return true;
  }
  return false;
}

struct Witness {
  const MinimalCover* first = nullptr;
  const MinimalCover* second = nullptr;
};

std::optional<Witness> find_witness(const std::vector<MinimalCover>& m1,
                                    const std::vector<MinimalCover>& m2, const Graph& g2,
                                    const VertexId& x, CoverUnionCase which) {
  auto all_contain = [&](const std::vector<MinimalCover>& m) {
    return std::all_of(m.begin(), m.end(), [&](const MinimalCover& c) { return c.contains(x); });
  };
  auto first_avoiding = [&](const std::vector<MinimalCover>& m) -> const MinimalCover* {
    for (const auto& c : m) {
      if (!c.contains(x)) return &c;
    }
    return nullptr;
  };
  switch (which) {
    case CoverUnionCase::AllContain:
      if (all_contain(m1) && all_contain(m2)) return Witness{&m1.front(), &m2.front()};
      return std::nullopt;
    case CoverUnionCase::SomeAvoidBoth: {
      auto c1 = first_avoiding(m1);
      auto c2 = first_avoiding(m2);
      if (c1 && c2) return Witness{c1, c2};
      return std::nullopt;
    }
    case CoverUnionCase::FirstForcedSecondFree:
      if (!all_contain(m1)) return std::nullopt;
      for (const auto& c2 : m2) {
        if (!c2.contains(x) && !has_redundant_neighbor(g2, c2, x)) return Witness{&m1.front(), &c2};
      }
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

bool cover_union_hypothesis(const Graph& g1, const Graph& g2, const VertexId& x,
                            CoverUnionCase which) {
  if (!shares_exactly(g1, g2, x)) return false;
  auto m1 = maximum_covers(g1);
  auto m2 = maximum_covers(g2);
  return find_witness(m1, m2, g2, x, which).has_value();
}

MinimalCover lemma27_union(const Graph& g1, const Graph& g2, const VertexId& x,
                           CoverUnionCase which) {
  constexpr const char* kResult = "cover union";
  if (!shares_exactly(g1, g2, x)) {
    throw HypothesisError(kResult, "vertex sets must meet exactly in " + x.label());
  }
  auto m1 = maximum_covers(g1);
  auto m2 = maximum_covers(g2);
  auto witness = find_witness(m1, m2, g2, x, which);
  if (!witness) throw HypothesisError(kResult, "case hypothesis does not hold");

  Graph whole = graph_union(g1, g2);
  VertexSet joined = witness->first->vertices();
  joined.insert(witness->second->vertices().begin(), witness->second->vertices().end());
  if (!is_minimal_vertex_cover(whole, joined)) {
    throw Error("cover union conclusion failed: " + to_string(joined) + " is not minimal");
  }
  MinimalCover result(whole, joined);
  if (result.size() != big_height(whole)) {
    throw Error("cover union conclusion failed: " + to_string(joined) + " is not maximum");
  }
  if (which == CoverUnionCase::AllContain && !in_every_maximum_cover(whole, x)) {
    throw Error("cover union conclusion failed: some maximum cover of the union avoids " +
                x.label());
  }
  if (which != CoverUnionCase::AllContain) {
    for (const auto& v : witness->first->vertices()) {
      if (witness->second->contains(v)) {
        throw Error("cover union conclusion failed: the two covers are not disjoint");
      }
    }
  }
  return result;
}

}  // namespace edgeideal
