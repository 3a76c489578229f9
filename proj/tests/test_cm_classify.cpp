#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "edgeideal/certificate.hpp"
#include "edgeideal/cm_classify.hpp"
#include "edgeideal/covers.hpp"
#include "edgeideal/error.hpp"
#include "edgeideal/generators.hpp"
#include "edgeideal/graph_gen.hpp"
#include "edgeideal/homology.hpp"

using namespace edgeideal;

namespace {

Graph whiskered(const Graph& base) {
  std::vector<Edge> es = base.edges();
  for (const auto& v : base.vertices()) es.emplace_back(v, VertexId(v.label() + "_w"));
  return Graph::from_edges(std::span<const Edge>(es));
}

Graph triangle_two_whiskers() {
  return Graph::from_edges({{"a", "b"}, {"b", "c"}, {"a", "c"}, {"a", "a1"}, {"b", "b1"}});
}

}  // namespace

TEST_CASE("whisker trees") {
  auto p4 = is_whisker_tree(path_graph(4));
  REQUIRE(p4);
  CHECK(p4->base.num_edges() == 1);
  CHECK_FALSE(is_whisker_tree(path_graph(3)));
  CHECK_FALSE(is_whisker_tree(Graph::from_edges({{"a", "b"}})));
  CHECK_FALSE(is_whisker_tree(whiskered(cycle_graph(3))));
  CHECK(is_whisker_tree(whiskered(path_graph(4))));
}

TEST_CASE("simplex partitions") {
  auto k3 = simplex_partition_check(complete_graph(3));
  REQUIRE(k3);
  CHECK(k3->size() == 1);
  auto p4 = simplex_partition_check(path_graph(4));
  REQUIRE(p4);
  CHECK(p4->size() == 2);
  CHECK_FALSE(simplex_partition_check(cycle_graph(4)));
  CHECK_FALSE(simplex_partition_check(path_graph(5)));
}

TEST_CASE("unicyclic shapes") {
  for (std::size_t len : {3u, 5u}) {
    CmVerdict v = classify_unicyclic(cycle_graph(len));
    CHECK(v.status == CmStatus::CM);
    CHECK(v.stci == StciStatus::Yes);
    CHECK(v.case_tag == "unicyclic-case-1");
  }
  for (std::size_t len : {4u, 6u, 7u}) {
    CmVerdict v = classify_unicyclic(cycle_graph(len));
    CHECK(v.status == CmStatus::NotCM);
    CHECK(v.evidence.count("failed"));
  }
  CHECK(classify_unicyclic(whiskered(cycle_graph(4))).case_tag == "unicyclic-case-2");
  CHECK(classify_unicyclic(triangle_two_whiskers()).status == CmStatus::NotCM);
  CHECK_THROWS_AS(classify_unicyclic(path_graph(4)), HypothesisError);
  CHECK_THROWS_AS(classify_unicyclic(complete_graph(4)), HypothesisError);
}

TEST_CASE("triangle shape with whisker trees") {
  Graph g = Graph::from_edges({{"a", "b"}, {"b", "c"}, {"a", "c"}, {"a", "p"}, {"p", "q"}, {"p", "p1"}, {"q", "q1"}});
  CmVerdict v = classify_unicyclic(g);
  CHECK(v.status == CmStatus::CM);
  CHECK(v.case_tag == "unicyclic-case-3");
  CHECK(projective_dimension(g) == height(g));

  Graph leaf = Graph::from_edges({{"a", "b"}, {"b", "c"}, {"a", "c"}, {"a", "p"}, {"p", "q"}, {"q", "r"}, {"r", "s"}});
  CHECK(classify_unicyclic(leaf).status == CmStatus::NotCM);
  CHECK(projective_dimension(leaf) != height(leaf));
}

TEST_CASE("four-cycle matches satisfy the tree hypothesis") {
  Graph g = Graph::from_edges({{"x1", "x2"}, {"x2", "x3"}, {"x3", "x4"}, {"x4", "x1"}, {"x1", "y1"}, {"x2", "y2"}});
  auto m = match_unicyclic(g);
  REQUIRE(m);
  CHECK(m->case_number == 5);
  Construction c = gens_lemma54(m->h1, m->h2);
  CHECK(verify_certificate(c.gens, c.cert).ok);
  CHECK(c.count() == height(g));
}

TEST_CASE("chordal and short-cycle-free equivalence") {
  CmVerdict k3 = corollary44(complete_graph(3));
  CHECK(k3.status == CmStatus::CM);
  CHECK(k3.stci == StciStatus::Yes);
  CHECK(k3.evidence.count("simplex_partition"));
  CHECK(corollary44(path_graph(5)).status == CmStatus::NotCM);
  CHECK(corollary44(whiskered(complete_graph(3))).status == CmStatus::CM);
  Graph bowtie = Graph::from_edges({{"x", "a"}, {"a", "b"}, {"b", "x"}, {"x", "c"}, {"c", "d"}, {"d", "x"}});
  CHECK(corollary44(bowtie).status == CmStatus::NotCM);
  CHECK_THROWS_AS(corollary44(cycle_graph(4)), HypothesisError);
  CHECK(corollary44(cycle_graph(6)).status == CmStatus::NotCM);
}

TEST_CASE("girth-six equivalence") {
  CHECK_THROWS_AS(corollary61(cycle_graph(7)), HypothesisError);
  CHECK_THROWS_AS(corollary61(Graph::from_edges({{"a", "b"}})), HypothesisError);
  CHECK_THROWS_AS(corollary61(cycle_graph(5)), HypothesisError);
  CmVerdict w = corollary61(whiskered(cycle_graph(6)));
  CHECK(w.status == CmStatus::CM);
  CHECK(w.evidence.count("whiskers"));
  CHECK(corollary61(cycle_graph(6)).status == CmStatus::NotCM);
}

TEST_CASE("combined verdicts") {
  CHECK(stci_verdict(cycle_graph(5)).stci == StciStatus::Yes);
  CHECK(stci_verdict(cycle_graph(4)).status == CmStatus::NotCM);
  Graph k4_minus = Graph::from_edges({{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}, {"a", "c"}});
  CHECK(stci_verdict(k4_minus).status != CmStatus::Unknown);
  Graph theta = Graph::from_edges({{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}, {"a", "e"}, {"e", "f"}, {"f", "c"}});
  CmVerdict u = stci_verdict(theta);
  CHECK(u.status == CmStatus::Unknown);
  CHECK(u.citations.empty());
  CHECK_FALSE(stci_verdict(cycle_graph(3)).citations.empty());
}

TEST_CASE("attached cycle shapes") {
  Graph base;
  auto shape = attached_cycles_shape(whiskered(complete_graph(3)), &base);
  REQUIRE(shape);
  CHECK(base == complete_graph(3));
  for (const auto& [v, a] : *shape) CHECK(a.is_whisker());
  AttachedGraph built = attach(path_graph(2), {{VertexId("x1"), Attachment::cycle(5)}, {VertexId("x2"), Attachment::whisker()}});
  auto back = attached_cycles_shape(built.graph);
  REQUIRE(back);
  CHECK(back->at(VertexId("x1")).cycle_length == 5);
}

TEST_CASE("unicyclic generator sets") {
  for (const Graph& g : {cycle_graph(3), cycle_graph(5), whiskered(cycle_graph(4)),
                         Graph::from_edges({{"a", "b"}, {"b", "c"}, {"a", "c"}, {"a", "p"}, {"p", "q"}, {"p", "p1"}, {"q", "q1"}})}) {
    auto c = gens_unicyclic(g);
    REQUIRE(c);
    CHECK(verify_certificate(c->gens, c->cert).ok);
    CHECK(c->count() == height(g));
  }
  CHECK_FALSE(gens_unicyclic(cycle_graph(4)));
}
