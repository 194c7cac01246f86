#pragma once

// Concrete piece families: the general constructions for primes q = 6n+1
// (n >= 5) and q = 6n+5 (n >= 3), and hand-built pieces for q = 11, 13, 17, 19.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "cageforge/amalgam.hpp"

namespace cageforge {

enum class FamilyVariant : std::uint8_t {
  General6n1,
  General6n5,
  Small11,
  Small13,
  Small17,
  Small19,
};

std::string_view to_string(FamilyVariant v);

struct FamilyId {
  FamilyVariant variant;
  std::uint32_t n = 0;  // q = 6n+1 or 6n+5 for the general variants, else 0

  friend bool operator==(const FamilyId&, const FamilyId&) = default;
};

/// Family covering q, or nullopt (non-primes, 2, 3, 5, 7).
std::optional<FamilyId> classify(std::uint32_t q);

/// Human-readable list of the primes that have a construction.
std::string supported_q_message();

/// Reduction sets and the four pieces of one family (u is left at 0).
struct PieceSet {
  std::uint32_t q;
  ReductionSpec spec;
  Piece h1;
  Piece h2;
  Piece g1;
  Piece g2;
  std::uint32_t k;
};

/// q = 6n+1, S = T = {0}. Throws ConstructionError if n < 5 or q is not prime.
PieceSet pieces_6n1(std::uint32_t n);
/// q = 6n+5, S = T = {0}. Throws ConstructionError if n < 3 or q is not prime.
PieceSet pieces_6n5(std::uint32_t n);
/// q in {11, 13, 17, 19}; otherwise UnsupportedQError.
PieceSet pieces_small(std::uint32_t q);
/// Dispatches on classify(q); UnsupportedQError when q is not covered.
PieceSet pieces_for(std::uint32_t q);

/// The pair of edges a G piece is split from (new vertex 0). nullopt for
/// q = 11 and 17, whose G pieces are given directly.
struct SplitEdges {
  LabelEdge first;
  LabelEdge second;
};
std::optional<SplitEdges> g1_split_edges(const FamilyId& id);
std::optional<SplitEdges> g2_split_edges(const FamilyId& id);

/// Point-side and line-side weight classes as published for the general
/// families, reduced to canonical classes.
struct PublishedWeights {
  WeightSet point;
  WeightSet line;
};
PublishedWeights published_weights_6n1(std::uint32_t n);
PublishedWeights published_weights_6n5(std::uint32_t n);

/// Full plan B*_q(S,T,u), validated with check_plan (PlanError on failure).
/// Throws UnsupportedQError for uncovered q or q >= max_q, and
/// ConstructionError for u outside 0..q-1.
AmalgamPlan plan_for(std::uint32_t q, std::uint32_t u, std::uint32_t max_q = kDefaultMaxQ);

}  // namespace cageforge
