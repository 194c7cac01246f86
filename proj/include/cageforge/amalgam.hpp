#pragma once

// Amalgams of labelled piece graphs into the blocks of a reduced B_q.
//
// A piece edge {a,b} placed in block P_i becomes the edge (i,a)-(i,b); in L_m
// it becomes [m,a]-[m,b]. A 4-cycle (i,a),(i,b),[m,c],[m,d] would need
// b - a = c - d (mod q), so keeping the point-side weights {±(b-a)} disjoint
// from the line-side weights rules out every 3- and 4-cycle.

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cageforge/graph.hpp"
#include "cageforge/reductions.hpp"

namespace cageforge {

/// Which block family a piece is amalgamated into: H1 -> P_0', H2 -> L_0',
/// G1 -> P_i and G2 -> L_i for the surviving i >= 1.
enum class PieceRole : std::uint8_t { H1, H2, G1, G2 };

std::string_view to_string(PieceRole role);

struct LabelEdge {
  std::uint32_t a;
  std::uint32_t b;

  friend bool operator==(const LabelEdge&, const LabelEdge&) = default;
  friend auto operator<=>(const LabelEdge&, const LabelEdge&) = default;
};

/// Simple graph whose vertices are named by elements of Z_q.
class Piece {
 public:
  /// Edges are normalized (a < b) and deduplicated. Throws ConstructionError
  /// for labels >= q, loops, or endpoints outside `labels`.
  Piece(PieceRole role, std::uint32_t q, LabelSet labels, std::vector<LabelEdge> edges);

  PieceRole role() const noexcept { return role_; }
  std::uint32_t q() const noexcept { return q_; }
  const LabelSet& labels() const noexcept { return labels_; }
  const std::vector<LabelEdge>& edges() const noexcept { return edges_; }

  bool has_edge(std::uint32_t a, std::uint32_t b) const;
  std::size_t degree(std::uint32_t label) const;
  LabelSet neighbors(std::uint32_t label) const;

  /// Same piece under a different role (used when H2 doubles as G2).
  Piece with_role(PieceRole role) const;

  /// Dense graph on |labels| vertices; vertex i is the i-th smallest label.
  Graph graph() const;

  friend bool operator==(const Piece&, const Piece&) = default;

 private:
  PieceRole role_;
  std::uint32_t q_;
  LabelSet labels_;
  std::vector<LabelEdge> edges_;
};

/// min((b-a) mod q, (a-b) mod q): the class {±(b-a)} of the edge's Cayley
/// colour. Throws ConstructionError if a == b or a label is >= q.
std::uint32_t edge_weight(std::uint32_t a, std::uint32_t b, std::uint32_t q);

/// Canonical weights 1 <= w <= (q-1)/2, each standing for {w, q-w}.
struct WeightSet {
  std::uint32_t q = 0;
  std::set<std::uint32_t> classes;

  friend bool operator==(const WeightSet&, const WeightSet&) = default;
};

WeightSet weight_set(const Piece& piece);
WeightSet weight_union(const WeightSet& a, const WeightSet& b);
/// Reduces each value to its class min(x mod q, -x mod q); zero classes are dropped.
WeightSet canonical_weights(std::uint32_t q, std::initializer_list<std::int64_t> values);
std::string to_string(const WeightSet& w);

/// Reasons the vertex split of `e1`, `e2` onto `new_label` is not allowed
/// (empty when it is): edges missing, shared endpoints, intersecting
/// endpoint neighbourhoods, label collisions, or piece girth below 5.
std::vector<std::string> split_obstacles(const Piece& piece, LabelEdge e1, LabelEdge e2,
                                         std::uint32_t new_label);

/// Removes e1 and e2 and joins a new vertex `new_label` to their four
/// endpoints. Throws ConstructionError listing the obstacles when the split
/// is not allowed; the result is re-checked to have girth >= 5.
Piece vertex_split(const Piece& piece, LabelEdge e1, LabelEdge e2, std::uint32_t new_label,
                   PieceRole role);

struct AmalgamPlan {
  std::uint32_t q = 0;
  ReductionSpec spec;
  Piece h1;
  Piece h2;
  Piece g1;
  Piece g2;
  std::uint32_t k = 0;

  /// q + k - u.
  std::uint32_t degree() const noexcept { return q + k - spec.u; }
  /// 2q(q-u) - |S| - |T|.
  std::size_t order() const { return reduced_order(q, spec); }
};

struct PlanCheck {
  std::string name;
  bool passed;
  std::string detail;
};

struct PlanReport {
  std::vector<PlanCheck> checks;
  WeightSet point_weights;  // H1 ∪ G1
  WeightSet line_weights;   // H2 ∪ G2

  bool ok() const;
  /// One line per failed check.
  std::string failures() const;
};

/// Verifies every hypothesis of the amalgam construction: reduction spec,
/// piece roles and label sets, degree profiles (with degree k+1 exactly on
/// S-T, T and S for H2, G1, G2), piece girths >= 5, and weight disjointness.
PlanReport check_plan(const AmalgamPlan& plan);

/// Thrown by amalgamate when check_plan fails.
class PlanError : public std::runtime_error {
 public:
  explicit PlanError(PlanReport report)
      : std::runtime_error("amalgam plan rejected:\n" + report.failures()),
        report_(std::move(report)) {}

  const PlanReport& report() const noexcept { return report_; }

 private:
  PlanReport report_;
};

/// If the plan forces a 5-circuit in the amalgam, a description of why:
/// some amalgamated piece has a 5-circuit, or an H-piece weight t leaves
/// blocks 1 and t in place (u < q - t) so a 5-circuit runs through them.
std::optional<std::string> sharp_five_witness(const AmalgamPlan& plan);

struct AmalgamOptions {
  /// Compute the girth and assert >= 5 (== 5 when sharp_five_witness applies).
  bool verify_girth = true;
  unsigned threads = 0;
};

/// Adds every piece edge inside its blocks. Vertex ids and tags are those of
/// `reduced`. Throws PlanError if check_plan fails and ConstructionError if
/// `reduced` was built from a different (q, spec). Order and regularity are
/// always asserted (std::logic_error on failure).
Graph amalgamate(const ReducedGraph& reduced, const AmalgamPlan& plan,
                 const AmalgamOptions& options = {});

}  // namespace cageforge
