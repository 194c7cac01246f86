#pragma once

// Vertex deletions on B_q: drop (0,s) for s in S and [0,t] for t in T, then
// drop the trailing u block pairs P_{q-1},L_{q-1} .. P_{q-u},L_{q-u}.

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "cageforge/graph.hpp"
#include "cageforge/semiplane.hpp"

namespace cageforge {

using LabelSet = std::set<std::uint32_t>;

struct ReductionSpec {
  LabelSet S;
  LabelSet T;
  std::uint32_t u = 0;

  friend bool operator==(const ReductionSpec&, const ReductionSpec&) = default;
};

/// Throws ConstructionError unless T ⊆ S ⊆ Z_q and 0 <= u <= q-1.
void validate(const ReductionSpec& spec, std::uint32_t q);

/// 2(q^2 - qu) - |S| - |T|.
std::size_t reduced_order(std::uint32_t q, const ReductionSpec& spec);

class ReducedGraph {
 public:
  ReducedGraph(std::uint32_t q, ReductionSpec spec, Graph graph, std::vector<VertexTag> tags,
               std::vector<std::optional<Vertex>> from_base);

  std::uint32_t q() const noexcept { return q_; }
  const ReductionSpec& spec() const noexcept { return spec_; }
  const Graph& graph() const noexcept { return graph_; }
  std::span<const VertexTag> tags() const noexcept { return tags_; }
  const VertexTag& tag(Vertex v) const { return tags_.at(v); }

  /// Compacted id of a B_q vertex, or nullopt if it was deleted.
  std::optional<Vertex> from_base(Vertex base_id) const { return from_base_.at(base_id); }
  /// Compacted id of the vertex with the given coordinates, if it survived.
  std::optional<Vertex> find(const VertexTag& tag) const;

  /// Number of block indices that survived Reduction 2: q - u.
  std::uint32_t surviving_blocks() const noexcept { return q_ - spec_.u; }

 private:
  std::uint32_t q_;
  ReductionSpec spec_;
  Graph graph_;
  std::vector<VertexTag> tags_;
  std::vector<std::optional<Vertex>> from_base_;
};

/// Deletes the vertices described by `spec`, compacting ids in base order.
/// Recomputes every degree and throws std::logic_error if the result does not
/// match the predicted order or deficient-vertex set.
ReducedGraph reduce(const LeviGraph& base, const ReductionSpec& spec);

/// Vertices predicted to have degree q-u-1 after reduction: surviving points
/// whose second coordinate lies in T and surviving lines whose second
/// coordinate lies in S. Every other survivor has degree q-u.
std::vector<VertexTag> predicted_deficient(std::uint32_t q, const ReductionSpec& spec);

}  // namespace cageforge
