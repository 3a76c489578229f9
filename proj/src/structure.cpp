#include "edgeideal/structure.hpp"

#include <algorithm>
#include <functional>

#include "edgeideal/error.hpp"

namespace edgeideal {

std::vector<Edge> Cycle::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    out.emplace_back(vertices[i], vertices[(i + 1) % vertices.size()]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Cycle::contains(const VertexId& v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

Cycle make_cycle(std::vector<VertexId> seq) {
  if (seq.size() < 3) throw InvalidArgument("a cycle needs at least three vertices");
  auto min_it = std::min_element(seq.begin(), seq.end());
  std::rotate(seq.begin(), min_it, seq.end());
  if (seq.back() < seq[1]) std::reverse(seq.begin() + 1, seq.end());
  return Cycle{std::move(seq)};
}

const char* to_string(BranchKind kind) {
  return kind == BranchKind::OneBranch ? "1-branch" : "2-branch";
}

std::size_t degree(const Graph& g, const VertexId& v) { return g.degree(v); }

bool is_terminal_vertex(const Graph& g, const VertexId& v) { return g.degree(v) == 1; }

std::vector<Edge> terminal_edges(const Graph& g) {
  std::vector<Edge> out;
  for (const auto& e : g.edges()) {
    if (g.degree(e.u) == 1 || g.degree(e.v) == 1) out.push_back(e);
  }
  return out;
}

std::vector<std::vector<Edge>> biconnected_components(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<std::pair<std::size_t, std::size_t>> stack;
  std::vector<std::vector<Edge>> blocks;
  int timer = 0;
  const auto& vs = g.vertices();

  std::function<void(std::size_t, std::ptrdiff_t)> dfs = [&](std::size_t u, std::ptrdiff_t parent) {
    disc[u] = low[u] = timer++;
    for (std::size_t w : g.neighbor_indices(u)) {
      if (static_cast<std::ptrdiff_t>(w) == parent) continue;
      if (disc[w] == -1) {
        stack.emplace_back(u, w);
        dfs(w, static_cast<std::ptrdiff_t>(u));
        low[u] = std::min(low[u], low[w]);
        if (low[w] >= disc[u]) {
          std::vector<Edge> block;
          while (true) {
            auto [a, b] = stack.back();
            stack.pop_back();
            block.emplace_back(vs[a], vs[b]);
            if (a == u && b == w) break;
          }
          std::sort(block.begin(), block.end());
          blocks.push_back(std::move(block));
        }
      } else if (disc[w] < disc[u]) {
        stack.emplace_back(u, w);
        low[u] = std::min(low[u], disc[w]);
      }
    }
  };
  for (std::size_t s = 0; s < n; ++s) {
    if (disc[s] == -1) dfs(s, -1);
  }
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

std::size_t cycle_rank(const Graph& g) {
  return g.num_edges() + g.connected_components().size() - g.num_vertices();
}

bool is_forest(const Graph& g) { return cycle_rank(g) == 0; }

bool is_tree(const Graph& g) { return g.num_vertices() > 0 && g.is_connected() && is_forest(g); }

namespace {

// Cycle order of a block whose vertices all have block-degree two, or
// nullopt when the block is not a cycle.
std::optional<Cycle> block_as_cycle(const std::vector<Edge>& block) {
  if (block.size() < 3) return std::nullopt;
  std::map<VertexId, std::vector<VertexId>> adj;
  for (const auto& e : block) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  if (adj.size() != block.size()) return std::nullopt;
  for (const auto& [v, nb] : adj) {
    if (nb.size() != 2) return std::nullopt;
  }
  std::vector<VertexId> seq;
  VertexId start = adj.begin()->first;
  VertexId prev = start;
  VertexId cur = adj.begin()->second.front();
  seq.push_back(start);
  while (cur != start) {
    seq.push_back(cur);
    const auto& nb = adj[cur];
    VertexId next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  }
  if (seq.size() != block.size()) return std::nullopt;
  return make_cycle(std::move(seq));
}

}  // namespace

bool is_cactus(const Graph& g) {
  for (const auto& block : biconnected_components(g)) {
    if (block.size() > 1 && !block_as_cycle(block)) return false;
  }
  return true;
}

std::vector<Cycle> cycles(const Graph& g) {
  std::vector<Cycle> out;
  for (const auto& block : biconnected_components(g)) {
    if (block.size() == 1) continue;
    auto c = block_as_cycle(block);
    if (!c) throw InvalidArgument("graph is not a cactus: a block is neither an edge nor a cycle");
    out.push_back(std::move(*c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Branch> branches_at(const Graph& g, const VertexId& x) {
  if (!g.has_vertex(x)) throw InvalidArgument("unknown vertex " + x.label());
  if (!g.is_connected()) throw InvalidArgument("branches_at requires a connected graph");
  if (!is_cactus(g)) throw InvalidArgument("branches_at requires a cactus graph");

  Graph rest = g.without_vertex(x);
  std::vector<Branch> out;
  for (const auto& comp : rest.connected_components()) {
    std::vector<VertexId> links;
    for (const auto& w : g.neighbors(x)) {
      if (comp.count(w)) links.push_back(w);
    }
    if (links.empty() || links.size() > 2) {
      throw Error("internal invariant violated: " + std::to_string(links.size()) +
                  " edges from " + x.label() + " into one component of a cactus");
    }
    VertexSet keep = comp;
    keep.insert(x);
    out.push_back(Branch{links.size() == 1 ? BranchKind::OneBranch : BranchKind::TwoBranch, x,
                         g.induced_subgraph(keep), links});
  }
  return out;
}

bool is_clique(const Graph& g, const VertexSet& s) {
  for (auto a = s.begin(); a != s.end(); ++a) {
    for (auto b = std::next(a); b != s.end(); ++b) {
      if (!g.has_edge(*a, *b)) return false;
    }
  }
  return true;
}

VertexSet simplicial_vertices(const Graph& g) {
  VertexSet out;
  for (const auto& v : g.vertices()) {
    auto nb = g.neighbors(v);
    if (is_clique(g, VertexSet(nb.begin(), nb.end()))) out.insert(v);
  }
  return out;
}

std::vector<VertexSet> simplexes(const Graph& g) {
  // The closed neighbourhood of a simplicial vertex is the unique maximal
  // clique containing it.
  std::set<VertexSet> found;
  for (const auto& v : simplicial_vertices(g)) {
    auto nb = g.neighbors(v);
    VertexSet closed(nb.begin(), nb.end());
    closed.insert(v);
    found.insert(std::move(closed));
  }
  return {found.begin(), found.end()};
}

bool is_chordal(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> weight(n, 0);
  std::vector<bool> numbered(n, false);
  std::vector<std::size_t> order;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (!numbered[v] && (best == n || weight[v] > weight[best])) best = v;
    }
    numbered[best] = true;
    order.push_back(best);
    for (std::size_t w : g.neighbor_indices(best)) {
      if (!numbered[w]) ++weight[w];
    }
  }
  // Reverse visit order is a perfect elimination ordering iff every vertex's
  // earlier-visited neighbours form a clique.
  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[order[i]] = i;
  const auto& vs = g.vertices();
  for (std::size_t v = 0; v < n; ++v) {
    VertexSet earlier;
    for (std::size_t w : g.neighbor_indices(v)) {
      if (position[w] < position[v]) earlier.insert(vs[w]);
    }
    if (!is_clique(g, earlier)) return false;
  }
  return true;
}

void for_each_cycle_of_length(const Graph& g, std::size_t length,
                              const std::function<bool(const Cycle&)>& visit) {
  if (length < 3) return;
  const std::size_t n = g.num_vertices();
  const auto& vs = g.vertices();
  std::vector<std::size_t> path;
  std::vector<bool> on_path(n, false);
  bool stop = false;

  // Cycles are rooted at their smallest vertex and reported once per
  // orientation class (second vertex < last vertex).
  std::function<void(std::size_t)> extend = [&](std::size_t start) {
    if (stop) return;
    std::size_t u = path.back();
    if (path.size() == length) {
      if (path[1] < path.back() && g.has_edge(vs[u], vs[start])) {
        std::vector<VertexId> seq;
        for (std::size_t i : path) seq.push_back(vs[i]);
        if (!visit(make_cycle(std::move(seq)))) stop = true;
      }
      return;
    }
    for (std::size_t w : g.neighbor_indices(u)) {
      if (w <= start || on_path[w]) continue;
      on_path[w] = true;
      path.push_back(w);
      extend(start);
      path.pop_back();
      on_path[w] = false;
      if (stop) return;
    }
  };
  for (std::size_t s = 0; s < n && !stop; ++s) {
    path = {s};
    on_path[s] = true;
    extend(s);
    on_path[s] = false;
  }
}

bool has_cycle_subgraph(const Graph& g, std::size_t length) {
  bool found = false;
  for_each_cycle_of_length(g, length, [&](const Cycle&) {
    found = true;
    return false;
  });
  return found;
}

std::vector<Cycle> induced_cycles_shorter_than(const Graph& g, std::size_t k) {
  std::vector<Cycle> out;
  for (std::size_t len = 3; len < k; ++len) {
    for_each_cycle_of_length(g, len, [&](const Cycle& c) {
      const auto& cv = c.vertices;
      bool chordless = true;
      for (std::size_t i = 0; i < cv.size() && chordless; ++i) {
        for (std::size_t j = i + 2; j < cv.size(); ++j) {
          if (i == 0 && j == cv.size() - 1) continue;
          if (g.has_edge(cv[i], cv[j])) {
            chordless = false;
            break;
          }
        }
      }
      if (chordless) out.push_back(c);
      return true;
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace edgeideal
