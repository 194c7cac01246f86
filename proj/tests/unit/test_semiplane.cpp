#include <doctest.h>

#include "cageforge/error.hpp"
#include "cageforge/semiplane.hpp"

using namespace cageforge;

TEST_CASE("is_prime") {
  CHECK(is_prime(13));
  CHECK_FALSE(is_prime(25));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(0));
  CHECK(is_prime(2));
  CHECK(is_prime(251));
  CHECK_FALSE(is_prime(49));
}

TEST_CASE("incident") {
  CHECK(incident(2, 3, 1, 1, 5));
  CHECK_FALSE(incident(2, 3, 1, 2, 5));
  CHECK(incident(0, 4, 3, 4, 7));
  CHECK_THROWS_AS(incident(5, 0, 0, 0, 5), std::invalid_argument);
}

TEST_CASE("tag/id bijection") {
  const LeviGraph b = build_levi(5);
  for (Vertex v = 0; v < b.graph().order(); ++v) {
    const VertexTag& t = b.tag(v);
    const Vertex back = t.kind == VertexKind::Point ? point_id(5, t.first, t.second)
                                                    : line_id(5, t.first, t.second);
    CHECK(back == v);
  }
  CHECK(to_string(b.tag(point_id(5, 2, 3))) == "(2,3)");
  CHECK(to_string(b.tag(line_id(5, 1, 4))) == "[1,4]");
}

TEST_CASE("build_levi small cases") {
  const LeviGraph b3 = build_levi(3);
  CHECK(b3.graph().order() == 18);
  CHECK(b3.graph().size() == 27);
  CHECK(is_regular(degree_profile(b3.graph()), 3));
  CHECK(girth(b3.graph()) == 6u);

  const LeviGraph b5 = build_levi(5);
  CHECK(b5.graph().order() == 50);
  CHECK(girth(b5.graph()) == 6u);

  const LeviGraph b13 = build_levi(13);
  CHECK(b13.graph().order() == 338);
  CHECK(is_regular(degree_profile(b13.graph()), 13));
  CHECK(girth(b13.graph()) == 6u);
  CHECK(b13.self_check().empty());
}

TEST_CASE("build_levi rejects bad q") {
  CHECK_THROWS_AS(build_levi(2), ConstructionError);
  CHECK_THROWS_AS(build_levi(9), ConstructionError);
  CHECK_THROWS_AS(build_levi(1), ConstructionError);
  CHECK_THROWS_AS(build_levi(257), ConstructionError);
  CHECK_NOTHROW(build_levi(257, {.max_q = 300, .verify = false, .check_girth = false}));
}

TEST_CASE("points and lines form the bipartition") {
  const LeviGraph b3 = build_levi(3);
  const auto bp = bipartition(b3.graph());
  REQUIRE(bp.has_value());
  CHECK(bp->first.size() == 9);
  CHECK(bp->second.size() == 9);
  for (Vertex v : bp->first) CHECK(b3.tag(v).kind == VertexKind::Point);
}

TEST_CASE("blocks and straight matching") {
  const std::uint32_t q = 7;
  const LeviGraph b = build_levi(q);
  const auto p0 = b.block(VertexKind::Point, 0);
  const auto l0 = b.block(VertexKind::Line, 0);
  REQUIRE(p0.size() == q);
  for (std::uint32_t y = 0; y < q; ++y) CHECK(b.graph().has_edge(p0[y], l0[y]));
  // Perfect matching between P_3 and L_5.
  const auto p3 = b.block(VertexKind::Point, 3);
  const auto l5 = b.block(VertexKind::Line, 5);
  for (Vertex p : p3) {
    int hits = 0;
    for (Vertex l : l5) hits += b.graph().has_edge(p, l);
    CHECK(hits == 1);
  }
}

TEST_CASE("translation_check") {
  CHECK(translation_check(build_levi(3)));
  CHECK(translation_check(build_levi(7)));

  const LeviGraph b5 = build_levi(5);
  auto edges = b5.graph().edges();
  edges.erase(edges.begin() + 3);
  const LeviGraph broken(5, Graph::from_edges(50, edges));
  CHECK_FALSE(translation_check(broken));
  CHECK_FALSE(broken.self_check().empty());
}
