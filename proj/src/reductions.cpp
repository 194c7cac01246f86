#include "cageforge/reductions.hpp"

#include <algorithm>
#include <string>

#include "cageforge/error.hpp"

namespace cageforge {

void validate(const ReductionSpec& spec, std::uint32_t q) {
  for (std::uint32_t s : spec.S) {
    if (s >= q) throw ConstructionError("S contains " + std::to_string(s) + " >= q");
  }
  for (std::uint32_t t : spec.T) {
    if (t >= q) throw ConstructionError("T contains " + std::to_string(t) + " >= q");
    if (!spec.S.contains(t)) {
      throw ConstructionError("T is not a subset of S (" + std::to_string(t) + " not in S)");
    }
  }
  if (spec.u > q - 1) {
    throw ConstructionError("u=" + std::to_string(spec.u) + " out of range 0.." +
                            std::to_string(q - 1));
  }
}

std::size_t reduced_order(std::uint32_t q, const ReductionSpec& spec) {
  return 2 * (static_cast<std::size_t>(q) * q - static_cast<std::size_t>(q) * spec.u) -
         spec.S.size() - spec.T.size();
}

ReducedGraph::ReducedGraph(std::uint32_t q, ReductionSpec spec, Graph graph,
                           std::vector<VertexTag> tags,
                           std::vector<std::optional<Vertex>> from_base)
    : q_(q),
      spec_(std::move(spec)),
      graph_(std::move(graph)),
      tags_(std::move(tags)),
      from_base_(std::move(from_base)) {}

std::optional<Vertex> ReducedGraph::find(const VertexTag& tag) const {
  if (tag.first >= q_ || tag.second >= q_) return std::nullopt;
  const Vertex base = tag.kind == VertexKind::Point ? point_id(q_, tag.first, tag.second)
                                                    : line_id(q_, tag.first, tag.second);
  return from_base_[base];
}

namespace {

bool deleted(const VertexTag& t, std::uint32_t q, const ReductionSpec& spec) {
  if (t.first >= q - spec.u) return true;
  if (t.first != 0) return false;
  return t.kind == VertexKind::Point ? spec.S.contains(t.second) : spec.T.contains(t.second);
}

}  // namespace

std::vector<VertexTag> predicted_deficient(std::uint32_t q, const ReductionSpec& spec) {
  std::vector<VertexTag> out;
  for (VertexKind kind : {VertexKind::Point, VertexKind::Line}) {
    const LabelSet& seconds = kind == VertexKind::Point ? spec.T : spec.S;
    for (std::uint32_t i = 0; i < q - spec.u; ++i) {
      for (std::uint32_t s : seconds) {
        const VertexTag t{kind, i, s};
        if (!deleted(t, q, spec)) out.push_back(t);
      }
    }
  }
  return out;
}

ReducedGraph reduce(const LeviGraph& base, const ReductionSpec& spec) {
  const std::uint32_t q = base.q();
  validate(spec, q);

  const std::size_t n = base.graph().order();
  std::vector<std::optional<Vertex>> from_base(n);
  std::vector<VertexTag> tags;
  Vertex next = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (!deleted(base.tag(v), q, spec)) {
      from_base[v] = next++;
      tags.push_back(base.tag(v));
    }
  }

  std::vector<Edge> edges;
  for (const Edge& e : base.graph().edges()) {
    if (from_base[e.u] && from_base[e.v]) edges.push_back({*from_base[e.u], *from_base[e.v]});
  }
  ReducedGraph out(q, spec, Graph::from_edges(next, edges), std::move(tags),
                   std::move(from_base));

  const Graph& g = out.graph();
  if (g.order() != reduced_order(q, spec)) {
    throw std::logic_error("reduced order " + std::to_string(g.order()) + " != expected " +
                           std::to_string(reduced_order(q, spec)));
  }
  std::vector<char> deficient(g.order(), 0);
  for (const VertexTag& t : predicted_deficient(q, spec)) deficient[*out.find(t)] = 1;
  const std::size_t full = q - spec.u;
  for (Vertex v = 0; v < g.order(); ++v) {
    const std::size_t want = deficient[v] ? full - 1 : full;
    if (g.degree(v) != want) {
      throw std::logic_error("vertex " + to_string(out.tag(v)) + " has degree " +
                             std::to_string(g.degree(v)) + ", expected " + std::to_string(want));
    }
  }
  return out;
}

}  // namespace cageforge
