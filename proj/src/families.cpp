#include "cageforge/families.hpp"

#include <initializer_list>
#include <vector>

#include "cageforge/error.hpp"

namespace cageforge {

std::string_view to_string(FamilyVariant v) {
  switch (v) {
    case FamilyVariant::General6n1: return "6n+1";
    case FamilyVariant::General6n5: return "6n+5";
    case FamilyVariant::Small11: return "q=11";
    case FamilyVariant::Small13: return "q=13";
    case FamilyVariant::Small17: return "q=17";
    case FamilyVariant::Small19: return "q=19";
  }
  return "?";
}

std::optional<FamilyId> classify(std::uint32_t q) {
  switch (q) {
    case 11: return FamilyId{FamilyVariant::Small11};
    case 13: return FamilyId{FamilyVariant::Small13};
    case 17: return FamilyId{FamilyVariant::Small17};
    case 19: return FamilyId{FamilyVariant::Small19};
    default: break;
  }
  if (q < 23 || !is_prime(q)) return std::nullopt;
  if (q % 6 == 1) return FamilyId{FamilyVariant::General6n1, (q - 1) / 6};
  return FamilyId{FamilyVariant::General6n5, (q - 5) / 6};
}

std::string supported_q_message() {
  return "supported q: 11, 13, 17, 19 and every prime q >= 23 "
         "(2, 3, 5, 7, composites and prime powers have no construction)";
}

namespace {

using Edges = std::vector<LabelEdge>;

LabelSet range_labels(std::uint32_t lo, std::uint32_t hi) {
  LabelSet s;
  for (std::uint32_t i = lo; i <= hi; ++i) s.insert(i);
  return s;
}

LabelSet without(std::uint32_t q, const LabelSet& removed) {
  LabelSet s;
  for (std::uint32_t i = 0; i < q; ++i) {
    if (!removed.contains(i)) s.insert(i);
  }
  return s;
}

Edges cycle(std::initializer_list<std::uint32_t> order) {
  const std::vector<std::uint32_t> v(order);
  Edges e;
  for (std::size_t i = 0; i < v.size(); ++i) e.push_back({v[i], v[(i + 1) % v.size()]});
  return e;
}

Edges concat(Edges a, const Edges& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

void require_prime(std::uint32_t q) {
  if (!is_prime(q)) throw ConstructionError("q=" + std::to_string(q) + " is not prime");
}

// ---- q = 6n+1: labels 1..6n, W1 = 1..3n, W2 = 3n+1..6n ----

Edges h1_6n1(std::uint32_t n) {
  const std::uint32_t m = 3 * n;
  Edges e;
  for (std::uint32_t i = 1; i <= m - 1; ++i) e.push_back({i, i + 1});
  e.push_back({m, 1});
  for (std::uint32_t i = m + 1; i <= 2 * m - 2; ++i) e.push_back({i, i + 2});
  e.push_back({2 * m - 1, m + 1});
  e.push_back({2 * m, m + 2});
  for (std::uint32_t i = 1; i <= m; ++i) e.push_back({i, m + i});
  return e;
}

Edges h2_6n1(std::uint32_t n) {
  const std::uint32_t m = 3 * n;
  Edges e;
  for (std::uint32_t i = 1; i <= m - 3; ++i) e.push_back({i, i + 3});
  e.insert(e.end(), {{m - 2, 1}, {m - 1, 2}, {m, 3}});
  for (std::uint32_t i = m + 1; i <= 2 * m - 4; ++i) e.push_back({i, i + 4});
  e.insert(e.end(), {{2 * m - 3, m + 1}, {2 * m - 2, m + 2}, {2 * m - 1, m + 3}, {2 * m, m + 4}});
  for (std::uint32_t i = 1; i <= m - 4; ++i) e.push_back({i, m + 4 + i});
  e.insert(e.end(), {{m - 3, m + 1}, {m - 2, m + 2}, {m - 1, m + 3}, {m, m + 4}});
  return e;
}

// ---- q = 6n+5: labels 1..6n+4, W1 = 1..3n+2, W2 = 3n+3..6n+4 ----

Edges h1_6n5(std::uint32_t n) {
  const std::uint32_t m = 3 * n;
  Edges e;
  for (std::uint32_t i = 1; i <= m + 1; ++i) e.push_back({i, i + 1});
  e.push_back({m + 2, 1});
  for (std::uint32_t i = m + 3; i <= 2 * m + 2; ++i) e.push_back({i, i + 2});
  e.push_back({2 * m + 3, m + 3});
  e.push_back({2 * m + 4, m + 4});
  for (std::uint32_t i = 1; i <= m + 2; ++i) e.push_back({i, m + i + 2});
  return e;
}

Edges h2_6n5(std::uint32_t n) {
  const std::uint32_t m = 3 * n;
  Edges e;
  for (std::uint32_t i = 1; i <= m - 1; ++i) e.push_back({i, i + 3});
  e.insert(e.end(), {{m, 1}, {m + 1, 2}, {m + 2, 3}});
  for (std::uint32_t i = m + 3; i <= 2 * m; ++i) e.push_back({i, i + 4});
  e.insert(e.end(),
           {{2 * m + 1, m + 3}, {2 * m + 2, m + 4}, {2 * m + 3, m + 5}, {2 * m + 4, m + 6}});
  for (std::uint32_t i = 1; i <= m - 2; ++i) e.push_back({i, m + i + 6});
  e.insert(e.end(), {{m - 1, m + 3}, {m, m + 4}, {m + 1, m + 5}, {m + 2, m + 6}});
  return e;
}

// ---- small cases, transcribed from the published figures ----

const Edges kQ13H1 = {{1, 4},  {4, 8},  {8, 12}, {12, 3}, {3, 7}, {7, 11},
                      {11, 2}, {2, 5},  {5, 6},  {6, 9},  {9, 10}, {10, 1},
                      {1, 5},  {2, 12}, {3, 6},  {4, 7},  {8, 9},  {10, 11}};
const Edges kQ13H2 = {{1, 8},  {8, 2},   {2, 9},  {9, 3},  {3, 10}, {10, 12},
                      {12, 4}, {4, 6},   {6, 11}, {11, 5}, {5, 7},  {7, 1},
                      {1, 6},  {2, 4},   {3, 11}, {5, 12}, {7, 9},  {8, 10}};

const Edges kQ19H1 = concat(cycle({1, 2, 3, 12, 14, 16, 9, 7, 8, 18, 11, 13, 4, 5, 6, 15, 17, 10}),
                            {{1, 8}, {2, 11}, {3, 4}, {5, 14}, {6, 9}, {7, 17},
                             {10, 12}, {13, 15}, {16, 18}});
const Edges kQ19H2 = concat(cycle({1, 5, 10, 4, 17, 13, 8, 12, 16, 11, 15, 9, 14, 18, 3, 7, 2, 6}),
                            {{1, 15}, {2, 13}, {3, 17}, {4, 9}, {5, 16}, {6, 12},
                             {7, 11}, {8, 14}, {10, 18}});

const Edges kQ11H1 = cycle({3, 5, 10, 7, 9});
const Edges kQ11G1 = cycle({0, 2, 4, 6, 8, 10, 1, 3, 5, 7, 9});
const Edges kQ11H2 = concat(cycle({0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10}), {{0, 4}, {2, 6}, {1, 8}});

const Edges kQ17H1 = concat(cycle({0, 16, 15, 2, 1, 13, 14, 11, 8, 5, 4, 9, 6, 3}),
                            {{0, 13}, {15, 11}, {1, 5}, {14, 9}, {8, 3}, {4, 16}, {6, 2}});
const Edges kQ17H2 = concat(cycle({0, 2, 4, 14, 3, 9, 16, 6, 13, 5, 11, 1, 8, 15}),
                            {{0, 9}, {4, 6}, {3, 5}, {16, 1}, {13, 15}, {11, 2}, {8, 14}});
const Edges kQ17G1 = concat(cycle({0, 1, 15, 16, 13, 12, 11, 10, 9, 4, 3, 8, 5, 6, 7, 2, 14}),
                            {{0, 12}, {1, 6}, {2, 16}, {3, 15}, {4, 7},
                             {5, 10}, {7, 11}, {8, 12}, {9, 13}, {10, 14}});
const Edges kQ17G2 = {{0, 2},  {1, 12}, {2, 12}, {12, 5}, {5, 3},   {3, 14},  {14, 4},
                      {4, 6},  {6, 8},  {8, 10}, {10, 1}, {1, 7},   {7, 16},  {16, 9},
                      {9, 11}, {11, 13}, {13, 15}, {15, 0}, {0, 10}, {2, 9},  {3, 10},
                      {4, 11}, {5, 13}, {6, 12}, {7, 14}, {7, 15},  {8, 16}};

PieceSet split_family(std::uint32_t q, const FamilyId& id, Piece h1, Piece h2) {
  const SplitEdges s1 = *g1_split_edges(id);
  const SplitEdges s2 = *g2_split_edges(id);
  Piece g1 = vertex_split(h1, s1.first, s1.second, 0, PieceRole::G1);
  Piece g2 = vertex_split(h2, s2.first, s2.second, 0, PieceRole::G2);
  return {q, {{0}, {0}, 0}, std::move(h1), std::move(h2), std::move(g1), std::move(g2), 3};
}

}  // namespace

std::optional<SplitEdges> g1_split_edges(const FamilyId& id) {
  const std::uint32_t n = id.n;
  const std::uint32_t f = (3 * n + 1) / 2;
  switch (id.variant) {
    case FamilyVariant::General6n1: return SplitEdges{{1, 3 * n}, {f, 3 * n + f}};
    case FamilyVariant::General6n5:
      // For n = 3 the general pair (1,12),(5,16) shares neighbour 14.
      if (n == 3) return SplitEdges{{1, 12}, {6, 17}};
      return SplitEdges{{1, 3 * n + 3}, {f, 3 * n + 2 + f}};
    case FamilyVariant::Small13: return SplitEdges{{1, 10}, {3, 12}};
    case FamilyVariant::Small19: return SplitEdges{{1, 10}, {9, 16}};
    default: return std::nullopt;
  }
}

std::optional<SplitEdges> g2_split_edges(const FamilyId& id) {
  const std::uint32_t n = id.n;
  switch (id.variant) {
    case FamilyVariant::General6n1:
      // (4,23) would add weight 8, already a point weight when n = 5.
      if (n == 5) return SplitEdges{{3, 22}, {5, 24}};
      return SplitEdges{{3, 3 * n + 7}, {4, 3 * n + 8}};
    case FamilyVariant::General6n5: return SplitEdges{{3, 3 * n + 9}, {4, 3 * n + 10}};
    case FamilyVariant::Small13: return SplitEdges{{2, 8}, {5, 11}};
    case FamilyVariant::Small19: return SplitEdges{{8, 13}, {11, 15}};
    default: return std::nullopt;
  }
}

PieceSet pieces_6n1(std::uint32_t n) {
  if (n < 5) throw ConstructionError("6n+1 family needs n >= 5, got n=" + std::to_string(n));
  const std::uint32_t q = 6 * n + 1;
  require_prime(q);
  const LabelSet labels = range_labels(1, 6 * n);
  return split_family(q, {FamilyVariant::General6n1, n}, Piece(PieceRole::H1, q, labels, h1_6n1(n)),
                      Piece(PieceRole::H2, q, labels, h2_6n1(n)));
}

PieceSet pieces_6n5(std::uint32_t n) {
  if (n < 3) throw ConstructionError("6n+5 family needs n >= 3, got n=" + std::to_string(n));
  const std::uint32_t q = 6 * n + 5;
  require_prime(q);
  const LabelSet labels = range_labels(1, 6 * n + 4);
  return split_family(q, {FamilyVariant::General6n5, n}, Piece(PieceRole::H1, q, labels, h1_6n5(n)),
                      Piece(PieceRole::H2, q, labels, h2_6n5(n)));
}

PieceSet pieces_small(std::uint32_t q) {
  switch (q) {
    case 13:
      return split_family(13, {FamilyVariant::Small13},
                          Piece(PieceRole::H1, 13, range_labels(1, 12), kQ13H1),
                          Piece(PieceRole::H2, 13, range_labels(1, 12), kQ13H2));
    case 19:
      return split_family(19, {FamilyVariant::Small19},
                          Piece(PieceRole::H1, 19, range_labels(1, 18), kQ19H1),
                          Piece(PieceRole::H2, 19, range_labels(1, 18), kQ19H2));
    case 11: {
      const ReductionSpec spec{{0, 1, 2, 4, 6, 8}, {}, 0};
      Piece h2(PieceRole::H2, 11, range_labels(0, 10), kQ11H2);
      Piece g2 = h2.with_role(PieceRole::G2);
      return {11,
              spec,
              Piece(PieceRole::H1, 11, without(11, spec.S), kQ11H1),
              std::move(h2),
              Piece(PieceRole::G1, 11, range_labels(0, 10), kQ11G1),
              std::move(g2),
              2};
    }
    case 17: {
      const ReductionSpec spec{{7, 10, 12}, {7, 10, 12}, 0};
      return {17,
              spec,
              Piece(PieceRole::H1, 17, without(17, spec.S), kQ17H1),
              Piece(PieceRole::H2, 17, without(17, spec.T), kQ17H2),
              Piece(PieceRole::G1, 17, range_labels(0, 16), kQ17G1),
              Piece(PieceRole::G2, 17, range_labels(0, 16), kQ17G2),
              3};
    }
    default:
      throw UnsupportedQError("no small-case pieces for q=" + std::to_string(q) + "; " +
                              supported_q_message());
  }
}

PieceSet pieces_for(std::uint32_t q) {
  const auto id = classify(q);
  if (!id) throw UnsupportedQError("q=" + std::to_string(q) + " unsupported; " + supported_q_message());
  switch (id->variant) {
    case FamilyVariant::General6n1: return pieces_6n1(id->n);
    case FamilyVariant::General6n5: return pieces_6n5(id->n);
    default: return pieces_small(q);
  }
}

PublishedWeights published_weights_6n1(std::uint32_t n) {
  const std::uint32_t q = 6 * n + 1;
  const std::int64_t m = 3 * static_cast<std::int64_t>(n);
  PublishedWeights w;
  w.point = n % 2 == 1 ? canonical_weights(q, {1, 2, (m + 1) / 2, m - 2, m - 1, m})
                       : canonical_weights(q, {1, 2, m / 2, (m + 2) / 2, m - 2, m - 1, m});
  w.line = n == 5 ? canonical_weights(q, {3, 4, 7, 9, 11, 12})
                  : canonical_weights(q, {3, 4, m - 7, m - 6, m - 4, m - 3});
  return w;
}

PublishedWeights published_weights_6n5(std::uint32_t n) {
  const std::uint32_t q = 6 * n + 5;
  const std::int64_t m = 3 * static_cast<std::int64_t>(n);
  PublishedWeights w;
  if (n == 3) {
    w.point = canonical_weights(q, {1, 2, 6, 9, 10, 11});
  } else if (n % 2 == 1) {
    w.point = canonical_weights(q, {1, 2, (m + 1) / 2, (m + 5) / 2, m, m + 1, m + 2});
  } else {
    w.point = canonical_weights(q, {1, 2, m / 2, (m + 6) / 2, m, m + 1, m + 2});
  }
  w.line = canonical_weights(q, {3, 4, m - 5, m - 4, m - 2, m - 1});
  return w;
}

AmalgamPlan plan_for(std::uint32_t q, std::uint32_t u, std::uint32_t max_q) {
  if (q >= max_q) {
    throw UnsupportedQError("q=" + std::to_string(q) + " exceeds the cap q < " +
                            std::to_string(max_q));
  }
  PieceSet set = pieces_for(q);
  if (u > q - 1) {
    throw ConstructionError("u=" + std::to_string(u) + " out of range 0.." + std::to_string(q - 1));
  }
  ReductionSpec spec = set.spec;
  spec.u = u;
  AmalgamPlan plan{q,
                   std::move(spec),
                   std::move(set.h1),
                   std::move(set.h2),
                   std::move(set.g1),
                   std::move(set.g2),
                   set.k};
  if (PlanReport report = check_plan(plan); !report.ok()) throw PlanError(std::move(report));
  return plan;
}

}  // namespace cageforge
