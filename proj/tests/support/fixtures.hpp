#pragma once

// Small named graphs and a seeded random generator shared by the test binaries.

#include <cstdint>
#include <random>
#include <vector>

#include "cageforge/graph.hpp"

namespace cageforge::testing {

inline Graph cycle(std::uint32_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return Graph::from_edges(n, e);
}

inline Graph path(std::uint32_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph::from_edges(n, e);
}

inline Graph complete(std::uint32_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) e.push_back({i, j});
  return Graph::from_edges(n, e);
}

// Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram.
inline Graph petersen() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.push_back({i, (i + 1) % 5});
    e.push_back({i, i + 5});
    e.push_back({5 + i, 5 + (i + 2) % 5});
  }
  return Graph::from_edges(10, e);
}

inline Graph random_graph(std::mt19937_64& rng, std::uint32_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (coin(rng)) e.push_back({i, j});
  return Graph::from_edges(n, e);
}

// Same graph with vertex v renamed perm[v].
inline Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<Edge> e;
  for (const Edge& x : g.edges()) e.push_back({perm[x.u], perm[x.v]});
  return Graph::from_edges(g.order(), e);
}

// Smallest cycle length from the enumeration oracle; 0 if none up to max_len.
inline std::uint32_t oracle_girth(const Graph& g, std::uint32_t max_len) {
  const auto counts = enumerate_short_cycles(g, max_len);
  return counts.empty() ? 0 : counts.begin()->first;
}

}  // namespace cageforge::testing
