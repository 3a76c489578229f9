#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "edgeideal/certificate.hpp"
#include "edgeideal/covers.hpp"
#include "edgeideal/error.hpp"
#include "edgeideal/generators.hpp"
#include "edgeideal/graph_gen.hpp"

using namespace edgeideal;

namespace {

Monomial edge(const char* u, const char* v) { return Monomial::edge(Edge(VertexId(u), VertexId(v))); }

bool verifies(const Construction& c) { return verify_certificate(c.gens, c.cert).ok; }

bool has_standalone(const Construction& c, const Monomial& m) {
  return std::any_of(c.gens.polys.begin(), c.gens.polys.end(),
                     [&](const Polynomial& p) { return p == Polynomial(m); });
}

Graph whiskered_path(std::size_t n) {
  Graph g = path_graph(n);
  std::vector<Edge> es = g.edges();
  for (std::size_t i = 1; i <= n; ++i) {
    es.emplace_back(VertexId("x" + std::to_string(i)), VertexId("y" + std::to_string(i)));
  }
  return Graph::from_edges(std::span<const Edge>(es));
}

}  // namespace

TEST_CASE("short cycles") {
  for (std::size_t len : {3u, 4u, 5u}) {
    Construction c = gens_cycle(len);
    CHECK(verifies(c));
    CHECK(c.gens.graph == cycle_graph(len));
    CHECK(has_standalone(c, edge("x1", "x2")));
  }
  CHECK(gens_cycle(3).count() == 2);
  CHECK(gens_cycle(4).count() == 3);
  Construction c5 = gens_cycle(5);
  CHECK(c5.count() == 3);
  CHECK(c5.gens.polys[1] == Polynomial(edge("x2", "x3")) + Polynomial(edge("x4", "x5")));
  CHECK(c5.gens.polys[2] == Polynomial(edge("x1", "x5")) + Polynomial(edge("x3", "x4")));
  CHECK_THROWS_AS(gens_cycle(6), InvalidArgument);
  CHECK_THROWS_AS(gens_cycle(3, {VertexId("a"), VertexId("a"), VertexId("b")}), InvalidArgument);
}

TEST_CASE("five-cycle with paths uses r + s + 3 generators") {
  for (std::size_t r = 0; r <= 3; ++r) {
    for (std::size_t s = 0; r + s <= 3; ++s) {
      Construction c = gens_lemma52(r, s);
      CAPTURE(r);
      CAPTURE(s);
      CHECK(verifies(c));
      CHECK(c.count() == r + s + 3);
      CHECK(c.gens.graph == lemma52_graph(r, s));
      CHECK(height(c.gens.graph) == r + s + 3);
      CHECK(big_height(c.gens.graph) == r + s + 3);
    }
  }
  CHECK(gens_lemma52(0, 0).gens.polys == gens_cycle(5).gens.polys);
}

TEST_CASE("five-cycle with one path at x1") {
  Construction c = gens_lemma52(1, 0);
  REQUIRE(c.count() == 4);
  CHECK(has_standalone(c, edge("x1", "a1")));
  CHECK(std::find(c.gens.polys.begin(), c.gens.polys.end(),
                  Polynomial(edge("x1", "x2")) + Polynomial(edge("a1", "b1"))) != c.gens.polys.end());
}

TEST_CASE("whisker trees hung at the five-cycle") {
  Graph l = Graph::from_edges({{"x1", "e"}, {"e", "f"}, {"f", "g"}, {"e", "e1"}, {"g", "g1"}, {"f", "f1"}});
  Construction c = gens_lemma53(0, 0, {l}, {});
  CHECK(verifies(c));
  CHECK(c.count() == big_height(c.gens.graph));
  CHECK(height(c.gens.graph) == c.count());

  Graph tail = Graph::from_edges({{"x1", "e"}, {"e", "f"}, {"f", "g"}, {"g", "g1"}});
  Construction t = gens_lemma53(0, 0, {tail}, {});
  CHECK(verifies(t));
  CHECK(t.count() == big_height(t.gens.graph));

  Graph rootless = Graph::from_edges({{"e", "f"}, {"f", "g"}});
  CHECK_THROWS_AS(gens_lemma53(0, 0, {rootless}, {}), HypothesisError);
  Graph two_roots = Graph::from_edges({{"x1", "e"}, {"x1", "f"}, {"e", "e1"}, {"f", "f1"}});
  CHECK_THROWS_AS(gens_lemma53(0, 0, {two_roots}, {}), HypothesisError);
}

TEST_CASE("four-cycle with trees") {
  Graph h1 = Graph::from_edges({{"x1", "y1"}});
  Graph h2 = Graph::from_edges({{"x2", "y2"}});
  Construction c = gens_lemma54(h1, h2);
  CHECK(verifies(c));
  REQUIRE(c.count() == 3);
  CHECK(c.gens.polys[2] == Polynomial(edge("x3", "x4")) + Polynomial(edge("x1", "y1")) +
                               Polynomial(edge("x2", "y2")));

  Graph tree = Graph::from_edges({{"x1", "u"}, {"x1", "p"}, {"p", "p1"}});
  Graph h2b = Graph::from_edges({{"x2", "z"}});
  Construction d = gens_lemma54(tree, h2b);
  CHECK(verifies(d));
  CHECK(d.count() == big_height(d.gens.graph));
  CHECK(d.count() == height(d.gens.graph));

  Graph bad = Graph::from_edges({{"x1", "p"}, {"p", "q"}});
  CHECK_THROWS_AS(gens_lemma54(bad, h2b), HypothesisError);
}

TEST_CASE("whisker tree generator sets") {
  Graph p4 = path_graph(4);
  Construction c = gens_whisker_tree(p4, Edge(VertexId("x2"), VertexId("x3")));
  CHECK(verifies(c));
  CHECK(c.count() == 2);
  CHECK(has_standalone(c, edge("x2", "x3")));

  Graph w3 = whiskered_path(3);
  Construction d = gens_whisker_tree(w3, Edge(VertexId("x1"), VertexId("x2")));
  CHECK(verifies(d));
  CHECK(d.count() == 3);
  CHECK(has_standalone(d, edge("x1", "x2")));

  Construction e = gens_whisker_tree(whiskered_path(6), Edge(VertexId("x3"), VertexId("x4")));
  CHECK(verifies(e));
  CHECK(e.count() == 6);

  CHECK_THROWS_AS(gens_whisker_tree(p4, Edge(VertexId("x1"), VertexId("x2"))), InvalidArgument);
  CHECK_THROWS_AS(gens_whisker_tree(Graph::from_edges({{"a", "b"}}), Edge(VertexId("a"), VertexId("b"))),
                  InvalidArgument);
  CHECK_THROWS_AS(gens_whisker_tree(path_graph(3), Edge(VertexId("x1"), VertexId("x2"))), InvalidArgument);
}

TEST_CASE("partition search") {
  auto c5 = partition_search(cycle_graph(5), 3);
  REQUIRE(c5);
  CHECK(verifies(*c5));
  CHECK_FALSE(partition_search(cycle_graph(5), 2));
  CHECK_THROWS_AS(partition_search(whiskered_path(6), 6, std::nullopt, 10), SearchBudgetExceeded);
}

TEST_CASE("layer search") {
  auto k3 = sv_layer_search(complete_graph(3), 3);
  REQUIRE(k3);
  CHECK(k3->count() == 2);
  CHECK(verifies(*k3));
  auto one = sv_layer_search(Graph::from_edges({{"a", "b"}}), 1);
  REQUIRE(one);
  CHECK(one->count() == 1);
  auto p4 = sv_layer_search(path_graph(4), 4);
  REQUIRE(p4);
  CHECK(p4->count() == 2);
  CHECK(has_standalone(*p4, edge("x2", "x3")));
  CHECK_FALSE(sv_layer_search(cycle_graph(5), 3));
}

TEST_CASE("attached short cycles") {
  Graph k3 = complete_graph(3);
  std::map<VertexId, Attachment> whiskers;
  for (const auto& v : k3.vertices()) whiskers[v] = Attachment::whisker();
  Construction c = gens_prop42(k3, whiskers);
  CHECK(verifies(c));
  CHECK(c.count() == 3);

  Graph e = Graph::from_edges({{"a", "b"}});
  Construction d = gens_prop42(e, {{VertexId("a"), Attachment::cycle(3)}, {VertexId("b"), Attachment::whisker()}});
  CHECK(verifies(d));
  CHECK(d.count() == 3);
  CHECK(d.count() == big_height(d.gens.graph));

  Construction f = gens_prop42(k3, {{VertexId("x1"), Attachment::cycle(4)},
                                    {VertexId("x2"), Attachment::cycle(5)},
                                    {VertexId("x3"), Attachment::cycle(3)}});
  CHECK(verifies(f));
  CHECK(f.count() == 8);
  CHECK(f.count() == big_height(f.gens.graph));

  CHECK_THROWS_AS(gens_prop42(e, {{VertexId("a"), Attachment::cycle(6)}, {VertexId("b"), Attachment::whisker()}}),
                  InvalidArgument);
}

TEST_CASE("relabelling keeps certificates valid") {
  Construction c = gens_cycle(3);
  Construction r = relabel(c, {{VertexId("x1"), VertexId("p")}, {VertexId("x2"), VertexId("q")},
                               {VertexId("x3"), VertexId("s")}});
  CHECK(verifies(r));
  CHECK(has_standalone(r, edge("p", "q")));
}
