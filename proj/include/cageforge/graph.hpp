#pragma once

// Undirected simple graphs over dense integer ids, plus the exact girth
// routine and the brute-force short-cycle counter used to cross-check it.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace cageforge {

using Vertex = std::uint32_t;

/// Unordered pair of vertex ids. Stored normalized (first < second) inside Graph.
struct Edge {
  Vertex u;
  Vertex v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Girth of a graph; std::nullopt means the graph is a forest.
using Girth = std::optional<std::uint32_t>;

/// Immutable simple graph in compressed-adjacency form. Neighbor lists are
/// sorted ascending, so `has_edge` is a binary search.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph on `n` vertices. Duplicate pairs (in either orientation)
  /// are merged. Throws ConstructionError for ids >= n or self-loops.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t size() const noexcept { return targets_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }

  bool has_edge(Vertex a, Vertex b) const noexcept;

  /// All edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
};

/// Exact girth by BFS from every vertex. A non-tree edge between levels a and
/// b closes a walk of length a+b+1; a source's search stops once 2*level+1
/// reaches the best value found so far. Sources are split across `threads`
/// workers (0 = hardware concurrency); the result does not depend on it.
Girth girth(const Graph& g, unsigned threads = 0);

/// Number of distinct cycles of each length 3..max_len, by exhaustive DFS.
/// Each cycle is rooted at its smallest vertex and walked in one direction
/// only. Lengths with no cycles are absent from the map. Cost grows
/// combinatorially; intended for small graphs or small max_len.
std::map<std::uint32_t, std::uint64_t> enumerate_short_cycles(const Graph& g,
                                                              std::uint32_t max_len);

/// Degree -> number of vertices with that degree.
using DegreeProfile = std::map<std::size_t, std::size_t>;

DegreeProfile degree_profile(const Graph& g);
bool is_regular(const DegreeProfile& p, std::size_t k);
/// True when every degree is k1 or k2 (a regular graph of either degree counts).
bool is_biregular(const DegreeProfile& p, std::size_t k1, std::size_t k2);

struct Bipartition {
  std::vector<Vertex> first;   // contains the lowest id of every component
  std::vector<Vertex> second;
};

/// BFS 2-colouring, or std::nullopt if an odd cycle exists.
std::optional<Bipartition> bipartition(const Graph& g);

}  // namespace cageforge
