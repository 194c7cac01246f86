#include <doctest.h>

#include "cageforge/certify.hpp"
#include "cageforge/families.hpp"
#include "cageforge/reductions.hpp"
#include "cageforge/semiplane.hpp"
#include "fixtures.hpp"

using namespace cageforge;

TEST_CASE("moore_bound") {
  CHECK(moore_bound(3, 5) == 10);
  CHECK(moore_bound(16, 5) == 257);
  CHECK(moore_bound(7, 6) == 86);
  CHECK(moore_bound(26, 5) == 677);
  CHECK(moore_bound(3, 6) == 14);  // Heawood
  for (std::uint32_t g = 3; g < 12; ++g) CHECK(moore_bound(2, g) == g);
  CHECK_THROWS_AS(moore_bound(1, 5), std::invalid_argument);
  CHECK_THROWS_AS(moore_bound(3, 2), std::invalid_argument);
  CHECK_THROWS_AS(moore_bound(1000, 40), std::overflow_error);
}

TEST_CASE("B_7 is not a Moore graph") {
  CHECK(build_levi(7).graph().order() == 98);
  CHECK(moore_bound(7, 6) != 98);
}

TEST_CASE("certify constructions") {
  const AmalgamPlan p13 = plan_for(13, 0);
  const Graph g13 = amalgamate(reduce(build_levi(13), p13.spec), p13);
  const Certificate c = certify(g13, {16, 5, 336});
  CHECK(c.passed());
  CHECK(c.moore_bound == 257u);
  CHECK(c.excess == 79);
  CHECK_FALSE(c.bipartite);

  const AmalgamPlan p11 = plan_for(11, 0);
  const Graph g11 = amalgamate(reduce(build_levi(11), p11.spec), p11);
  CHECK(certify(g11, {13, 5, 236}).passed());
}

TEST_CASE("certify records a girth mismatch") {
  const Certificate c = certify(build_levi(13).graph(), {13, 5, 338});
  CHECK_FALSE(c.passed());
  CHECK(c.girth == 6u);
  CHECK(c.bipartite);
  CHECK(c.moore_bound.has_value());
  CHECK_FALSE(c.excess.has_value());
  for (const auto& chk : c.checks) CHECK(chk.pass == (chk.name != "girth"));
}

TEST_CASE("certify without claim or girth") {
  const Certificate c = certify(testing::path(4));
  CHECK(c.acyclic());
  CHECK(c.passed());
  CHECK(c.checks.empty());
  CHECK_FALSE(c.moore_bound.has_value());

  const Certificate skipped = certify(testing::petersen(), {3, 5, 10}, {.compute_girth = false});
  CHECK_FALSE(skipped.girth_computed);
  CHECK_FALSE(skipped.passed());
}

TEST_CASE("certify is deterministic") {
  const Graph g = testing::petersen();
  const Certificate a = certify(g, {3, 5, 10});
  const Certificate b = certify(g, {3, 5, 10});
  CHECK(a.excess == b.excess);
  CHECK(a.excess == 0);
  CHECK(a.degrees == b.degrees);
  CHECK(a.checks.size() == b.checks.size());
}
