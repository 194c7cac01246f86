#pragma once

// Levi graph of the elliptic semiplane C_q over Z_q (q prime): points (x,y),
// lines [m,b], incidence y = m*x + b. Vertical lines and everything at
// infinity are absent, so the graph is q-regular on 2q^2 vertices.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cageforge/graph.hpp"

namespace cageforge {

enum class VertexKind : std::uint8_t { Point, Line };

/// Semiplane coordinates of a vertex: (first, second) = (x, y) for points and
/// (m, b) for lines. `first` is the block index (P_first or L_first).
struct VertexTag {
  VertexKind kind;
  std::uint32_t first;
  std::uint32_t second;

  friend bool operator==(const VertexTag&, const VertexTag&) = default;
};

std::string to_string(const VertexTag& tag);

/// Largest q accepted by build_levi unless overridden (q < kDefaultMaxQ).
inline constexpr std::uint32_t kDefaultMaxQ = 256;

/// Trial division; meant for q < 2^16.
bool is_prime(std::uint64_t q);

/// y == m*x + b (mod q). Throws ConstructionError for coordinates >= q.
bool incident(std::uint32_t x, std::uint32_t y, std::uint32_t m, std::uint32_t b,
              std::uint32_t q);

/// Dense id of point (x,y) / line [m,b] in B_q: points first, then lines,
/// each side lexicographic.
constexpr Vertex point_id(std::uint32_t q, std::uint32_t x, std::uint32_t y) {
  return x * q + y;
}
constexpr Vertex line_id(std::uint32_t q, std::uint32_t m, std::uint32_t b) {
  return q * q + m * q + b;
}

class LeviGraph {
 public:
  /// Wraps an existing graph with the canonical B_q tagging. The graph must
  /// have 2q^2 vertices; its edges are not checked (see self_check).
  LeviGraph(std::uint32_t q, Graph graph);

  std::uint32_t q() const noexcept { return q_; }
  const Graph& graph() const noexcept { return graph_; }
  const VertexTag& tag(Vertex v) const { return tags_.at(v); }
  std::span<const VertexTag> tags() const noexcept { return tags_; }

  /// Ids of block P_index (kind == Point) or L_index (kind == Line), in
  /// ascending second coordinate.
  std::vector<Vertex> block(VertexKind kind, std::uint32_t index) const;

  /// Structural invariants of B_q: order 2q^2, q-regular, every edge joins a
  /// point and a line incident under y = mx + b, each (P_i, L_j) pair joined
  /// by a perfect matching, P_0 and L_0 joined straight. Returns the list of
  /// violations (empty when valid). Girth is checked separately.
  std::vector<std::string> self_check() const;

 private:
  std::uint32_t q_;
  Graph graph_;
  std::vector<VertexTag> tags_;
};

struct LeviOptions {
  std::uint32_t max_q = kDefaultMaxQ;
  /// Run self_check() on the result, throwing std::logic_error on failure.
  bool verify = true;
  /// Also confirm girth 6. Dominates the cost for large q.
  bool check_girth = true;
};

/// Builds B_q. Throws ConstructionError when q is not prime, q == 2, or
/// q >= options.max_q.
LeviGraph build_levi(std::uint32_t q, const LeviOptions& options = {});

/// True iff the edge set is invariant under (x,y)|[m,b] -> (x,y+a)|[m,b+a]
/// for every a in Z_q.
bool translation_check(const LeviGraph& levi);

}  // namespace cageforge
