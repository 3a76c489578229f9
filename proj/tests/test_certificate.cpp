#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "edgeideal/certificate.hpp"
#include "edgeideal/covers.hpp"
#include "edgeideal/error.hpp"
#include "edgeideal/generators.hpp"
#include "edgeideal/graph_gen.hpp"

using namespace edgeideal;

namespace {

Monomial var(const char* v, std::uint32_t e = 1) { return Monomial::variable(VertexId(v), e); }
Monomial edge(const char* u, const char* v) { return Monomial::edge(Edge(VertexId(u), VertexId(v))); }
Polynomial poly(const Monomial& m, std::int64_t c = 1) { return Polynomial(m, c); }

GeneratorSet five_cycle_sums() {
  GeneratorSet gs;
  gs.graph = cycle_graph(5);
  gs.polys = {poly(edge("x1", "x2")), poly(edge("x2", "x3")) + poly(edge("x4", "x5")),
              poly(edge("x1", "x5")) + poly(edge("x3", "x4"))};
  return gs;
}

}  // namespace

TEST_CASE("a single edge needs no steps") {
  GeneratorSet gs{Graph::from_edges({{"a", "b"}}), {poly(edge("a", "b"))}};
  Verdict v = verify_certificate(gs, {});
  CHECK(v.ok);
  REQUIRE(v.established.size() == 1);
  CHECK(v.established[0] == edge("a", "b"));
}

TEST_CASE("missing edges fail the coverage check") {
  GeneratorSet gs{path_graph(3), {poly(edge("x1", "x2"))}};
  Verdict v = verify_certificate(gs, {});
  CHECK_FALSE(v.ok);
  CHECK_FALSE(v.failed_step);
}

TEST_CASE("terms outside the edge ideal are rejected") {
  GeneratorSet gs{path_graph(3), {poly(edge("x1", "x2")), poly(edge("x1", "x3")) + poly(edge("x2", "x3"))}};
  CHECK_FALSE(terms_in_edge_ideal(gs));
  CHECK_FALSE(verify_certificate(gs, {}).ok);
}

TEST_CASE("pairing x1x2 with x2x3 + x4x5 is not a valid splitting") {
  GeneratorSet gs = five_cycle_sums();
  Certificate cert{{SVStep{0, 1}}};
  Verdict v = verify_certificate(gs, cert);
  CHECK_FALSE(v.ok);
  REQUIRE(v.failed_step);
  CHECK(*v.failed_step == 0);
  CHECK_THROWS_AS(CertificateBuilder(gs).sv(0, 1), Error);
}

TEST_CASE("five-cycle identity certificate") {
  GeneratorSet gs = five_cycle_sums();
  // (x1x5)^2 = x1x5*g2 - x1x3*g1 + x3^2*x1x2
  PowerStep square{edge("x1", "x5"), 2,
                   {{poly(edge("x1", "x5")), 2},
                    {poly(edge("x1", "x3"), -1), 1},
                    {poly(var("x3", 2)), 0}}};
  Certificate cert{{square, LinearStep{2, {3}}, SVStep{4, 1}}};
  Verdict v = verify_certificate(gs, cert);
  CHECK(v.ok);
  CHECK(v.established.size() == 5);
}

TEST_CASE("a wrong power identity fails at its step") {
  GeneratorSet gs = five_cycle_sums();
  PowerStep square{edge("x1", "x5"), 2, {{poly(edge("x1", "x5")), 2}, {poly(var("x3", 2)), 0}}};
  Verdict v = verify_certificate(gs, {{square}});
  CHECK_FALSE(v.ok);
  CHECK(v.failed_step == std::optional<std::size_t>(0));
  PowerStep too_high{edge("x1", "x5"), kMaxPower + 1, {}};
  CHECK(verify_certificate(gs, {{too_high}}).failed_step == std::optional<std::size_t>(0));
}

TEST_CASE("references past the element list fail") {
  GeneratorSet gs = five_cycle_sums();
  CHECK_FALSE(verify_certificate(gs, {{SVStep{0, 9}}}).ok);
  CHECK_FALSE(verify_certificate(gs, {{LinearStep{7, {0}}}}).ok);
}

TEST_CASE("linear steps need exactly one remaining unit term") {
  std::vector<Polynomial> elements{poly(edge("a", "b")), poly(edge("a", "b")) + poly(edge("c", "d"), 2)};
  CHECK_FALSE(apply_step(elements, LinearStep{1, {0}}).ok());
  elements[1] = poly(edge("a", "b"), 3) - poly(edge("c", "d"));
  StepOutcome out = apply_step(elements, LinearStep{1, {0}});
  REQUIRE(out.ok());
  CHECK(out.established[0] == poly(edge("c", "d")));
}

TEST_CASE("builder saturation reaches the five-cycle set") {
  CertificateBuilder b(five_cycle_sums());
  CHECK(b.saturate());
  CHECK(verify_certificate(b.generators(), b.certificate()).ok);
}

TEST_CASE("json round trip") {
  Construction c = gens_lemma52(1, 1);
  std::string text = certificate_to_json(c.gens, c.cert);
  CertificateFile f = certificate_from_json(text);
  REQUIRE(f.graph);
  CHECK(*f.graph == c.gens.graph);
  CHECK(f.polys == c.gens.polys);
  CHECK(f.cert == c.cert);
  CHECK(verify_certificate({*f.graph, f.polys}, f.cert).ok);
  CHECK(certificate_to_json({*f.graph, f.polys}, f.cert) == text);
}

TEST_CASE("malformed json is rejected") {
  CHECK_THROWS_AS(certificate_from_json("{"), InvalidArgument);
  CHECK_THROWS_AS(certificate_from_json(R"({"format":"other","version":1})"), InvalidArgument);
  CHECK_THROWS_AS(certificate_from_json(R"({"format":"edgeideal-certificate","version":1,"generators":[],"steps":[{"bogus":{}}]})"),
                  InvalidArgument);
}

TEST_CASE("verified sets never beat the big height") {
  for (std::size_t r = 0; r <= 2; ++r) {
    for (std::size_t s = 0; s <= 2; ++s) {
      Construction c = gens_lemma52(r, s);
      REQUIRE(verify_certificate(c.gens, c.cert).ok);
      CHECK(c.count() >= big_height(c.gens.graph));
    }
  }
}
