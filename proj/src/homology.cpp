#include "edgeideal/homology.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <unordered_map>

#include "edgeideal/covers.hpp"
#include "edgeideal/error.hpp"

namespace edgeideal {

namespace {

using Mask = std::uint64_t;

// Rank over F2 of a 0/1 matrix given as rows of packed bits.
std::size_t f2_rank(std::vector<std::vector<Mask>> rows) {
  std::size_t rank = 0;
  if (rows.empty()) return 0;
  const std::size_t words = rows.front().size();
  for (std::size_t col = 0; col < words * 64 && rank < rows.size(); ++col) {
    const std::size_t w = col / 64;
    const Mask bit = Mask{1} << (col % 64);
    std::size_t pivot = rank;
    while (pivot < rows.size() && !(rows[pivot][w] & bit)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && (rows[r][w] & bit)) {
        for (std::size_t k = w; k < words; ++k) rows[r][k] ^= rows[rank][k];
      }
    }
    ++rank;
  }
  return rank;
}

// Reduced F2 homology from faces grouped by size (index = number of
// vertices, so index 0 holds the empty face).
std::vector<std::size_t> homology_from_faces(const std::vector<std::vector<Mask>>& by_size) {
  const std::size_t levels = by_size.size();
  // boundary_rank[s] = rank of the map from faces of size s to size s-1.
  std::vector<std::size_t> boundary_rank(levels + 1, 0);
  for (std::size_t s = 1; s < levels; ++s) {
    const auto& lower = by_size[s - 1];
    if (by_size[s].empty() || lower.empty()) continue;
    std::unordered_map<Mask, std::size_t> index;
    for (std::size_t i = 0; i < lower.size(); ++i) index.emplace(lower[i], i);
    const std::size_t words = (lower.size() + 63) / 64;
    std::vector<std::vector<Mask>> rows;
    rows.reserve(by_size[s].size());
    for (Mask f : by_size[s]) {
      std::vector<Mask> row(words, 0);
      for (Mask m = f; m; m &= m - 1) {
        std::size_t j = index.at(f & ~(m & -m));
        row[j / 64] |= Mask{1} << (j % 64);
      }
      rows.push_back(std::move(row));
    }
    boundary_rank[s] = f2_rank(std::move(rows));
  }
  std::vector<std::size_t> ranks(levels, 0);
  for (std::size_t s = 0; s < levels; ++s) {
    ranks[s] = by_size[s].size() - boundary_rank[s] - boundary_rank[s + 1];
  }
  while (ranks.size() > 1 && ranks.back() == 0) ranks.pop_back();
  return ranks;
}

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(g.num_vertices(), 0);
  for (std::size_t i = 0; i < g.num_vertices(); ++i) {
    for (std::size_t j : g.neighbor_indices(i)) adj[i] |= Mask{1} << j;
  }
  return adj;
}

void guard(const Graph& g) {
  std::size_t active = g.non_isolated_vertices().size();
  if (active > kHomologyVertexLimit) {
    throw SizeLimitError("homology oracle refuses " + std::to_string(active) +
                         " non-isolated vertices (limit " +
                         std::to_string(kHomologyVertexLimit) + ")");
  }
}

}  // namespace

SimplicialComplex independence_complex(const Graph& g) {
  guard(g);
  SimplicialComplex c;
  c.vertices = g.vertices();
  VertexSet all = g.vertex_set();
  for (const auto& cover : enumerate_minimal_covers(g)) {
    VertexSet facet;
    std::set_difference(all.begin(), all.end(), cover.vertices().begin(), cover.vertices().end(),
                        std::inserter(facet, facet.end()));
    c.facets.push_back(std::move(facet));
  }
  std::sort(c.facets.begin(), c.facets.end());
  return c;
}

std::vector<std::size_t> reduced_homology_ranks(const SimplicialComplex& complex) {
  if (complex.vertices.size() > 64) throw SizeLimitError("complex has more than 64 vertices");
  std::vector<VertexId> vs = complex.vertices;
  std::sort(vs.begin(), vs.end());
  std::set<Mask> faces{0};
  for (const auto& facet : complex.facets) {
    Mask f = 0;
    for (const auto& v : facet) {
      auto it = std::lower_bound(vs.begin(), vs.end(), v);
      if (it == vs.end() || *it != v) throw InvalidArgument("facet vertex " + v.label() + " unknown");
      f |= Mask{1} << (it - vs.begin());
    }
    if (std::popcount(f) > 20) throw SizeLimitError("facet too large for face enumeration");
    for (Mask sub = f;; sub = (sub - 1) & f) {
      faces.insert(sub);
      if (sub == 0) break;
    }
  }
  std::vector<std::vector<Mask>> by_size;
  for (Mask f : faces) {
    std::size_t s = static_cast<std::size_t>(std::popcount(f));
    if (by_size.size() <= s) by_size.resize(s + 1);
    by_size[s].push_back(f);
  }
  return homology_from_faces(by_size);
}

BettiTable betti_table(const Graph& g) {
  guard(g);
  const auto adj = adjacency_masks(g);
  Mask active = 0;
  for (std::size_t i = 0; i < g.num_vertices(); ++i) {
    if (adj[i]) active |= Mask{1} << i;
  }
  BettiTable table;
  for (Mask w = active;; w = (w - 1) & active) {
    std::vector<std::vector<Mask>> by_size;
    for (Mask f = w;; f = (f - 1) & w) {
      bool independent = true;
      for (Mask m = f; m && independent; m &= m - 1) {
        independent = (adj[static_cast<std::size_t>(std::countr_zero(m))] & f) == 0;
      }
      if (independent) {
        std::size_t s = static_cast<std::size_t>(std::popcount(f));
        if (by_size.size() <= s) by_size.resize(s + 1);
        by_size[s].push_back(f);
      }
      if (f == 0) break;
    }
    for (auto& level : by_size) std::sort(level.begin(), level.end());
    const auto ranks = homology_from_faces(by_size);
    const std::size_t size = static_cast<std::size_t>(std::popcount(w));
    // ranks[s] is H̃ in dimension s-1; β_{i,W} needs dimension |W|-i-1.
    for (std::size_t s = 0; s < ranks.size(); ++s) {
      if (ranks[s] == 0 || s > size) continue;
      const std::size_t i = size - s;
      table.entries[{i, size}] += ranks[s];
      table.pd = std::max(table.pd, i);
    }
    if (w == 0) break;
  }
  return table;
}

std::size_t projective_dimension(const Graph& g) { return betti_table(g).pd; }

}  // namespace edgeideal
