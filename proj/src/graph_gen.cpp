#include "edgeideal/graph_gen.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

#include "edgeideal/error.hpp"

namespace edgeideal {

namespace {

std::string label(const std::string& prefix, std::size_t i) { return prefix + std::to_string(i); }

}  // namespace

Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<VertexId> vs;
  std::vector<Edge> es;
  for (std::size_t i = 1; i <= n; ++i) vs.emplace_back(label("v", i));
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      if (coin(rng)) es.emplace_back(label("v", i), label("v", j));
    }
  }
  return Graph(std::move(vs), std::move(es));
}

Graph random_cactus(std::mt19937_64& rng, std::size_t max_vertices) {
  if (max_vertices < 2) throw InvalidArgument("a random cactus needs room for two vertices");
  const std::size_t target = std::uniform_int_distribution<std::size_t>(2, max_vertices)(rng);
  std::size_t count = 1;
  std::vector<Edge> es;
  std::bernoulli_distribution want_cycle(0.5);
  while (count < target) {
    const std::size_t x = std::uniform_int_distribution<std::size_t>(1, count)(rng);
    const std::size_t room = target - count;
    if (room >= 2 && want_cycle(rng)) {
      const std::size_t len =
          std::uniform_int_distribution<std::size_t>(3, std::min<std::size_t>(6, room + 1))(rng);
      std::size_t prev = x;
      for (std::size_t k = 1; k < len; ++k) {
        ++count;
        es.emplace_back(label("v", prev), label("v", count));
        prev = count;
      }
      es.emplace_back(label("v", prev), label("v", x));
    } else {
      ++count;
      es.emplace_back(label("v", x), label("v", count));
    }
  }
  return Graph::from_edges(std::span<const Edge>(es));
}

Graph random_relabel(std::mt19937_64& rng, const Graph& g) {
  std::set<std::string> used;
  std::uniform_int_distribution<int> digit(0, 999999);
  std::vector<std::string> fresh;
  while (fresh.size() < g.num_vertices()) {
    std::string s = "r" + std::to_string(digit(rng));
    if (used.insert(s).second) fresh.push_back(s);
  }
  std::map<VertexId, VertexId> mapping;
  for (std::size_t i = 0; i < g.num_vertices(); ++i) mapping.emplace(g.vertices()[i], fresh[i]);
  return g.relabeled(mapping);
}

Graph path_graph(std::size_t n, const std::string& prefix) {
  std::vector<VertexId> vs;
  std::vector<Edge> es;
  for (std::size_t i = 1; i <= n; ++i) vs.emplace_back(label(prefix, i));
  for (std::size_t i = 1; i < n; ++i) es.emplace_back(label(prefix, i), label(prefix, i + 1));
  return Graph(std::move(vs), std::move(es));
}

Graph cycle_graph(std::size_t n, const std::string& prefix) {
  if (n < 3) throw InvalidArgument("a cycle needs at least three vertices");
  std::vector<Edge> es;
  for (std::size_t i = 1; i <= n; ++i) es.emplace_back(label(prefix, i), label(prefix, i % n + 1));
  return Graph::from_edges(std::span<const Edge>(es));
}

Graph complete_graph(std::size_t n, const std::string& prefix) {
  std::vector<VertexId> vs;
  std::vector<Edge> es;
  for (std::size_t i = 1; i <= n; ++i) vs.emplace_back(label(prefix, i));
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) es.emplace_back(label(prefix, i), label(prefix, j));
  }
  return Graph(std::move(vs), std::move(es));
}

Graph SmallGraph::to_graph(const std::string& prefix) const {
  std::vector<VertexId> vs;
  std::vector<Edge> es;
  for (std::size_t i = 0; i < n; ++i) vs.emplace_back(label(prefix, i + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rows[i] >> j & 1u) es.emplace_back(label(prefix, i + 1), label(prefix, j + 1));
    }
  }
  return Graph(std::move(vs), std::move(es));
}

SmallGraph SmallGraph::from_graph(const Graph& g) {
  if (g.num_vertices() > 11) throw SizeLimitError("compact graphs hold at most 11 vertices");
  SmallGraph s;
  s.n = g.num_vertices();
  s.rows.assign(s.n, 0);
  for (std::size_t i = 0; i < s.n; ++i) {
    for (std::size_t j : g.neighbor_indices(i)) s.rows[i] |= 1u << j;
  }
  return s;
}

namespace {

// Stable colour refinement; colours are ranks of invariant signatures.
std::vector<std::size_t> refine(const SmallGraph& g) {
  std::vector<std::size_t> colour(g.n);
  for (std::size_t i = 0; i < g.n; ++i) colour[i] = static_cast<std::size_t>(std::popcount(g.rows[i]));
  std::size_t classes = 0;
  while (true) {
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> sig(g.n);
    for (std::size_t i = 0; i < g.n; ++i) {
      sig[i].first = colour[i];
      for (std::size_t j = 0; j < g.n; ++j) {
        if (g.rows[i] >> j & 1u) sig[i].second.push_back(colour[j]);
      }
      std::sort(sig[i].second.begin(), sig[i].second.end());
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (std::size_t i = 0; i < g.n; ++i) {
      colour[i] = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), sig[i]) -
                                           sorted.begin());
    }
    if (sorted.size() == classes) return colour;
    classes = sorted.size();
  }
}

std::uint64_t encode(const SmallGraph& g, const std::vector<std::size_t>& order) {
  std::uint64_t code = 0;
  for (std::size_t a = 0; a < g.n; ++a) {
    for (std::size_t b = a + 1; b < g.n; ++b) {
      code = code << 1 | (g.rows[order[a]] >> order[b] & 1u);
    }
  }
  return code;
}

}  // namespace

std::uint64_t canonical_code(const SmallGraph& g) {
  if (g.n > 11) throw SizeLimitError("canonical codes cover at most 11 vertices");
  auto colour = refine(g);
  std::vector<std::vector<std::size_t>> cells;
  std::size_t max_colour = g.n == 0 ? 0 : *std::max_element(colour.begin(), colour.end()) + 1;
  cells.resize(max_colour);
  for (std::size_t i = 0; i < g.n; ++i) cells[colour[i]].push_back(i);

  std::uint64_t best = ~std::uint64_t{0};
  std::vector<std::size_t> order;
  std::function<void(std::size_t)> permute = [&](std::size_t c) {
    if (c == cells.size()) {
      best = std::min(best, encode(g, order));
      return;
    }
    auto cell = cells[c];
    std::sort(cell.begin(), cell.end());
    do {
      order.insert(order.end(), cell.begin(), cell.end());
      permute(c + 1);
      order.resize(order.size() - cell.size());
    } while (std::next_permutation(cell.begin(), cell.end()));
  };
  permute(0);
  // Vertex count disambiguates codes of different orders.
  return best ^ (static_cast<std::uint64_t>(g.n) << 58);
}

std::vector<std::vector<SmallGraph>> connected_graphs_up_to(std::size_t max_n,
                                                            const HereditaryFilter& keep) {
  if (max_n > 11) throw SizeLimitError("exhaustive enumeration covers at most 11 vertices");
  std::vector<std::vector<SmallGraph>> levels(max_n + 1);
  if (max_n == 0) return levels;
  SmallGraph single{1, {0}};
  if (!keep || keep(single)) levels[1].push_back(single);
  for (std::size_t n = 2; n <= max_n; ++n) {
    std::unordered_map<std::uint64_t, SmallGraph> seen;
    for (const auto& base : levels[n - 1]) {
      for (std::uint32_t mask = 1; mask < (1u << (n - 1)); ++mask) {
        SmallGraph g{n, base.rows};
        g.rows.push_back(mask);
        for (std::size_t i = 0; i + 1 < n; ++i) {
          if (mask >> i & 1u) g.rows[i] |= 1u << (n - 1);
        }
        if (keep && !keep(g)) continue;
        seen.try_emplace(canonical_code(g), std::move(g));
      }
    }
    std::vector<std::pair<std::uint64_t, SmallGraph>> sorted(seen.begin(), seen.end());
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [code, g] : sorted) levels[n].push_back(std::move(g));
  }
  return levels;
}

bool small_is_chordal(const SmallGraph& g) {
  std::uint32_t alive = g.n == 32 ? ~0u : (1u << g.n) - 1;
  while (alive) {
    bool removed = false;
    for (std::size_t v = 0; v < g.n && !removed; ++v) {
      if (!(alive >> v & 1u)) continue;
      std::uint32_t nb = g.rows[v] & alive;
      bool clique = true;
      for (std::uint32_t m = nb; m && clique; m &= m - 1) {
        std::size_t w = static_cast<std::size_t>(std::countr_zero(m));
        if ((nb & ~(1u << w) & ~g.rows[w]) != 0) clique = false;
      }
      if (clique) {
        alive &= ~(1u << v);
        removed = true;
      }
    }
    if (!removed) return false;
  }
  return true;
}

std::size_t small_cycle_rank(const SmallGraph& g) {
  std::size_t edges = 0;
  for (auto r : g.rows) edges += static_cast<std::size_t>(std::popcount(r));
  edges /= 2;
  std::vector<std::size_t> parent(g.n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> root = [&](std::size_t i) {
    return parent[i] == i ? i : parent[i] = root(parent[i]);
  };
  std::size_t components = g.n;
  for (std::size_t i = 0; i < g.n; ++i) {
    for (std::size_t j = i + 1; j < g.n; ++j) {
      if ((g.rows[i] >> j & 1u) && root(i) != root(j)) {
        parent[root(i)] = root(j);
        --components;
      }
    }
  }
  return edges + components - g.n;
}

std::size_t small_girth(const SmallGraph& g) {
  std::size_t best = 0;
  for (std::size_t s = 0; s < g.n; ++s) {
    std::vector<int> dist(g.n, -1), parent(g.n, -1);
    std::vector<std::size_t> queue{s};
    dist[s] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      std::size_t u = queue[head];
      for (std::size_t w = 0; w < g.n; ++w) {
        if (!(g.rows[u] >> w & 1u)) continue;
        if (dist[w] == -1) {
          dist[w] = dist[u] + 1;
          parent[w] = static_cast<int>(u);
          queue.push_back(w);
        } else if (parent[u] != static_cast<int>(w)) {
          std::size_t len = static_cast<std::size_t>(dist[u] + dist[w] + 1);
          if (best == 0 || len < best) best = len;
        }
      }
    }
  }
  return best;
}

}  // namespace edgeideal
