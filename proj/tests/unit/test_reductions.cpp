#include <doctest.h>

#include <algorithm>

#include "cageforge/error.hpp"
#include "cageforge/reductions.hpp"
#include "cageforge/semiplane.hpp"

using namespace cageforge;

namespace {

// Degree of every surviving vertex counted straight from the incidence rule,
// without going through reduce().
DegreeProfile brute_force_profile(std::uint32_t q, const ReductionSpec& spec) {
  auto point_alive = [&](std::uint32_t x, std::uint32_t y) {
    return x < q - spec.u && !(x == 0 && spec.S.contains(y));
  };
  auto line_alive = [&](std::uint32_t m, std::uint32_t b) {
    return m < q - spec.u && !(m == 0 && spec.T.contains(b));
  };
  DegreeProfile p;
  for (std::uint32_t x = 0; x < q; ++x)
    for (std::uint32_t y = 0; y < q; ++y) {
      if (!point_alive(x, y)) continue;
      std::size_t d = 0;
      for (std::uint32_t m = 0; m < q; ++m)
        for (std::uint32_t b = 0; b < q; ++b) d += line_alive(m, b) && incident(x, y, m, b, q);
      ++p[d];
    }
  for (std::uint32_t m = 0; m < q; ++m)
    for (std::uint32_t b = 0; b < q; ++b) {
      if (!line_alive(m, b)) continue;
      std::size_t d = 0;
      for (std::uint32_t x = 0; x < q; ++x)
        for (std::uint32_t y = 0; y < q; ++y) d += point_alive(x, y) && incident(x, y, m, b, q);
      ++p[d];
    }
  return p;
}

}  // namespace

TEST_CASE("validate") {
  CHECK_NOTHROW(validate({{0}, {0}, 0}, 13));
  CHECK_THROWS_AS(validate({{0}, {1}, 0}, 13), ConstructionError);   // T not in S
  CHECK_THROWS_AS(validate({{13}, {}, 0}, 13), ConstructionError);   // label >= q
  CHECK_THROWS_AS(validate({{}, {}, 13}, 13), ConstructionError);    // u > q-1
  CHECK_NOTHROW(validate({{}, {}, 12}, 13));
}

TEST_CASE("reduce q=13, S=T={0}") {
  const LeviGraph b = build_levi(13);
  const ReductionSpec spec{{0}, {0}, 0};
  const ReducedGraph r = reduce(b, spec);
  CHECK(r.graph().order() == 336);
  // Deficient: 12 points (i,0) and 12 lines [j,0], i,j != 0.
  const DegreeProfile expected{{12, 24}, {13, 312}};
  CHECK(degree_profile(r.graph()) == expected);
  CHECK(brute_force_profile(13, spec) == expected);
}

TEST_CASE("reduce q=11, S={0,1,2,4,6,8}, T={}") {
  const ReducedGraph r = reduce(build_levi(11), {{0, 1, 2, 4, 6, 8}, {}, 0});
  CHECK(r.graph().order() == 236);
  CHECK(degree_profile(r.graph()) == brute_force_profile(11, {{0, 1, 2, 4, 6, 8}, {}, 0}));
}

TEST_CASE("reduce to the straight matching") {
  const ReducedGraph r = reduce(build_levi(13), {{}, {}, 12});
  CHECK(r.graph().order() == 26);
  CHECK(degree_profile(r.graph()) == DegreeProfile{{1, 26}});
  CHECK(r.surviving_blocks() == 1);
}

TEST_CASE("reduced degrees match brute force across specs") {
  const std::uint32_t q = 7;
  const LeviGraph b = build_levi(q);
  const std::vector<ReductionSpec> specs{
      {{}, {}, 0}, {{0}, {0}, 0}, {{0, 3}, {3}, 1}, {{1, 2, 5}, {}, 2}, {{0, 1, 2, 3, 4, 5, 6}, {0, 4}, 4}};
  for (const auto& spec : specs) {
    const ReducedGraph r = reduce(b, spec);
    CHECK(r.graph().order() == reduced_order(q, spec));
    CHECK(degree_profile(r.graph()) == brute_force_profile(q, spec));

    // Deficient vertices are exactly the predicted ones.
    const auto predicted = predicted_deficient(q, spec);
    std::size_t deficient = 0;
    for (Vertex v = 0; v < r.graph().order(); ++v) {
      const bool low = r.graph().degree(v) == q - spec.u - 1;
      deficient += low;
      const bool listed = std::find(predicted.begin(), predicted.end(), r.tag(v)) != predicted.end();
      CHECK(low == listed);
    }
    CHECK(deficient == predicted.size());
  }
}

TEST_CASE("from_base and find") {
  const LeviGraph b = build_levi(5);
  const ReducedGraph r = reduce(b, {{0, 2}, {2}, 1});
  CHECK_FALSE(r.from_base(point_id(5, 0, 0)).has_value());
  CHECK_FALSE(r.from_base(point_id(5, 4, 1)).has_value());
  CHECK_FALSE(r.from_base(line_id(5, 0, 2)).has_value());
  const auto kept = r.from_base(line_id(5, 0, 0));
  REQUIRE(kept.has_value());
  CHECK(r.tag(*kept) == VertexTag{VertexKind::Line, 0, 0});
  CHECK(r.find({VertexKind::Line, 0, 0}) == kept);
  CHECK_FALSE(r.find({VertexKind::Point, 0, 2}).has_value());
}
