#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "cageforge/error.hpp"
#include "cageforge/graph.hpp"
#include "fixtures.hpp"

using namespace cageforge;
using namespace cageforge::testing;

TEST_CASE("from_edges builds, dedups and rejects bad input") {
  const std::vector<Edge> tri{{0, 1}, {1, 2}, {2, 0}};
  const Graph t = Graph::from_edges(3, tri);
  CHECK(t.order() == 3);
  CHECK(t.size() == 3);

  const Graph empty = Graph::from_edges(4, {});
  CHECK(empty.order() == 4);
  CHECK(empty.size() == 0);

  const std::vector<Edge> dup{{0, 1}, {1, 0}};
  CHECK(Graph::from_edges(5, dup).size() == 1);

  const std::vector<Edge> out_of_range{{0, 7}};
  CHECK_THROWS_AS(Graph::from_edges(3, out_of_range), ConstructionError);
  const std::vector<Edge> loop{{2, 2}};
  CHECK_THROWS_AS(Graph::from_edges(3, loop), ConstructionError);
  try {
    Graph::from_edges(3, out_of_range);
  } catch (const ConstructionError& e) {
    CHECK(std::string(e.what()).find("7") != std::string::npos);
  }
}

TEST_CASE("adjacency is symmetric and sorted") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = random_graph(rng, 25, 0.2);
    std::size_t deg_sum = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      const auto nb = g.neighbors(v);
      CHECK(std::is_sorted(nb.begin(), nb.end()));
      CHECK(std::adjacent_find(nb.begin(), nb.end()) == nb.end());
      for (Vertex w : nb) {
        CHECK(w != v);
        CHECK(g.has_edge(w, v));
      }
      deg_sum += nb.size();
    }
    CHECK(deg_sum == 2 * g.size());
  }
}

TEST_CASE("girth of named graphs") {
  CHECK(girth(petersen()) == 5u);
  CHECK(girth(cycle(8)) == 8u);
  CHECK_FALSE(girth(path(4)).has_value());
  CHECK(girth(complete(4)) == 3u);
  CHECK(girth(cycle(3)) == 3u);
  CHECK_FALSE(girth(Graph::from_edges(0, {})).has_value());
}

TEST_CASE("girth threads agree") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    const Graph g = random_graph(rng, 400, 0.01);
    const Girth one = girth(g, 1);
    CHECK(girth(g, 4) == one);
    CHECK(girth(g, 0) == one);
  }
}

TEST_CASE("enumerate_short_cycles") {
  CHECK(enumerate_short_cycles(complete(4), 4) == std::map<std::uint32_t, std::uint64_t>{{3, 4}, {4, 3}});
  CHECK(enumerate_short_cycles(cycle(5), 6) == std::map<std::uint32_t, std::uint64_t>{{5, 1}});
  CHECK(enumerate_short_cycles(cycle(6), 5).empty());
  // Petersen: 12 pentagons, 10 hexagons.
  CHECK(enumerate_short_cycles(petersen(), 6) == std::map<std::uint32_t, std::uint64_t>{{5, 12}, {6, 10}});
  // K5 has C(5,3)=10 triangles, 15 four-cycles, 12 five-cycles.
  CHECK(enumerate_short_cycles(complete(5), 5) ==
        std::map<std::uint32_t, std::uint64_t>{{3, 10}, {4, 15}, {5, 12}});
}

TEST_CASE("girth agrees with the cycle oracle on random graphs") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    const std::uint32_t n = 8 + static_cast<std::uint32_t>(rng() % 18);
    const Graph g = random_graph(rng, n, 0.12 + 0.01 * (trial % 10));
    const Girth bfs = girth(g);
    const std::uint32_t oracle = oracle_girth(g, n);
    CHECK(bfs.value_or(0) == oracle);
  }
}

TEST_CASE("girth is relabel invariant and monotone under edge addition") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = random_graph(rng, 30, 0.08);
    std::vector<Vertex> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(girth(relabel(g, perm)) == girth(g));

    auto edges = g.edges();
    const Vertex a = static_cast<Vertex>(rng() % 30);
    Vertex b = static_cast<Vertex>(rng() % 30);
    if (a == b) b = (b + 1) % 30;
    edges.push_back({a, b});
    const Girth before = girth(g);
    const Girth after = girth(Graph::from_edges(30, edges));
    if (before) {
      REQUIRE(after.has_value());
      CHECK(*after <= *before);
    }
  }
}

TEST_CASE("degree_profile and regularity predicates") {
  CHECK(degree_profile(petersen()) == DegreeProfile{{3, 10}});
  const std::vector<Edge> star{{0, 1}, {0, 2}, {0, 3}, {0, 4}};
  CHECK(degree_profile(Graph::from_edges(5, star)) == DegreeProfile{{1, 4}, {4, 1}});
  CHECK(degree_profile(Graph::from_edges(3, {})) == DegreeProfile{{0, 3}});
  CHECK(is_regular(degree_profile(petersen()), 3));
  CHECK_FALSE(is_regular(degree_profile(petersen()), 4));
  CHECK(is_biregular(DegreeProfile{{1, 4}, {4, 1}}, 1, 4));
  CHECK_FALSE(is_biregular(DegreeProfile{{1, 4}, {4, 1}, {2, 1}}, 1, 4));
}

TEST_CASE("bipartition") {
  const auto six = bipartition(cycle(6));
  REQUIRE(six.has_value());
  CHECK(six->first.size() == 3);
  CHECK(six->second.size() == 3);
  CHECK_FALSE(bipartition(cycle(3)).has_value());
  CHECK_FALSE(bipartition(petersen()).has_value());
  // Isolated vertices land on the first side.
  const auto iso = bipartition(Graph::from_edges(3, {}));
  REQUIRE(iso.has_value());
  CHECK(iso->first.size() == 3);
}
