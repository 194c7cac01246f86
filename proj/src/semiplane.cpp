#include "cageforge/semiplane.hpp"

#include <algorithm>

#include "cageforge/error.hpp"

namespace cageforge {

std::string to_string(const VertexTag& tag) {
  const std::string body = std::to_string(tag.first) + "," + std::to_string(tag.second);
  return tag.kind == VertexKind::Point ? "(" + body + ")" : "[" + body + "]";
}

bool is_prime(std::uint64_t q) {
  if (q < 2) return false;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

bool incident(std::uint32_t x, std::uint32_t y, std::uint32_t m, std::uint32_t b,
              std::uint32_t q) {
  if (x >= q || y >= q || m >= q || b >= q) {
    throw ConstructionError("semiplane coordinate out of range for q=" + std::to_string(q));
  }
  return y == (static_cast<std::uint64_t>(m) * x + b) % q;
}

LeviGraph::LeviGraph(std::uint32_t q, Graph graph) : q_(q), graph_(std::move(graph)) {
  const std::size_t n = 2ull * q * q;
  if (graph_.order() != n) {
    throw ConstructionError("Levi graph for q=" + std::to_string(q) + " needs " +
                            std::to_string(n) + " vertices, got " +
                            std::to_string(graph_.order()));
  }
  tags_.reserve(n);
  for (VertexKind kind : {VertexKind::Point, VertexKind::Line}) {
    for (std::uint32_t a = 0; a < q; ++a) {
      for (std::uint32_t b = 0; b < q; ++b) tags_.push_back({kind, a, b});
    }
  }
}

std::vector<Vertex> LeviGraph::block(VertexKind kind, std::uint32_t index) const {
  if (index >= q_) throw ConstructionError("block index out of range");
  std::vector<Vertex> ids(q_);
  for (std::uint32_t s = 0; s < q_; ++s) {
    ids[s] = kind == VertexKind::Point ? point_id(q_, index, s) : line_id(q_, index, s);
  }
  return ids;
}

std::vector<std::string> LeviGraph::self_check() const {
  std::vector<std::string> issues;
  const std::uint32_t q = q_;
  const auto prof = degree_profile(graph_);
  if (!is_regular(prof, q)) issues.push_back("not " + std::to_string(q) + "-regular");

  for (const Edge& e : graph_.edges()) {
    const VertexTag& a = tags_[e.u];
    const VertexTag& b = tags_[e.v];
    if (a.kind == b.kind) {
      issues.push_back("edge inside one side: " + to_string(a) + "-" + to_string(b));
      continue;
    }
    const VertexTag& p = a.kind == VertexKind::Point ? a : b;
    const VertexTag& l = a.kind == VertexKind::Point ? b : a;
    if (!incident(p.first, p.second, l.first, l.second, q)) {
      issues.push_back("non-incident edge " + to_string(p) + "-" + to_string(l));
    }
  }

  // Perfect matching P_i <-> L_j: every point meets each line block once and
  // every line of L_j is met once from P_i.
  std::vector<int> line_hits(static_cast<std::size_t>(q) * q);
  std::vector<int> block_hits(q);
  for (std::uint32_t i = 0; i < q; ++i) {
    std::fill(line_hits.begin(), line_hits.end(), 0);
    for (std::uint32_t y = 0; y < q; ++y) {
      std::fill(block_hits.begin(), block_hits.end(), 0);
      for (Vertex w : graph_.neighbors(point_id(q, i, y))) {
        const VertexTag& t = tags_[w];
        if (t.kind != VertexKind::Line) continue;
        ++block_hits[t.first];
        ++line_hits[static_cast<std::size_t>(t.first) * q + t.second];
      }
      if (std::any_of(block_hits.begin(), block_hits.end(), [](int h) { return h != 1; })) {
        issues.push_back("(" + std::to_string(i) + "," + std::to_string(y) +
                         ") does not meet every line block exactly once");
      }
    }
    for (std::uint32_t j = 0; j < q; ++j) {
      const auto first = line_hits.begin() + static_cast<std::ptrdiff_t>(j) * q;
      if (std::any_of(first, first + q, [](int h) { return h != 1; })) {
        issues.push_back("P_" + std::to_string(i) + " to L_" + std::to_string(j) +
                         " is not a perfect matching");
      }
    }
  }

  // P_0 and L_0 are joined straight.
  for (std::uint32_t s = 0; s < q; ++s) {
    for (std::uint32_t i = 0; i < q; ++i) {
      if (!graph_.has_edge(point_id(q, 0, s), line_id(q, i, s))) {
        issues.push_back("(0," + std::to_string(s) + ") not straight to L_" + std::to_string(i));
      }
      if (!graph_.has_edge(line_id(q, 0, s), point_id(q, i, s))) {
        issues.push_back("[0," + std::to_string(s) + "] not straight to P_" + std::to_string(i));
      }
    }
  }
  return issues;
}

LeviGraph build_levi(std::uint32_t q, const LeviOptions& options) {
  if (!is_prime(q)) throw ConstructionError(std::to_string(q) + " is not prime");
  if (q == 2) throw ConstructionError("q=2 is rejected: B_2 is an 8-cycle, not girth 6");
  if (q >= options.max_q) {
    throw ConstructionError("q=" + std::to_string(q) + " exceeds the cap q < " +
                            std::to_string(options.max_q));
  }

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(q) * q * q);
  for (std::uint32_t x = 0; x < q; ++x) {
    for (std::uint32_t y = 0; y < q; ++y) {
      for (std::uint32_t m = 0; m < q; ++m) {
        const std::uint32_t b = static_cast<std::uint32_t>(
            (y + static_cast<std::uint64_t>(q - m) * x) % q);
        edges.push_back({point_id(q, x, y), line_id(q, m, b)});
      }
    }
  }
  LeviGraph levi(q, Graph::from_edges(2ull * q * q, edges));

  if (options.verify) {
    if (auto issues = levi.self_check(); !issues.empty()) {
      throw std::logic_error("B_" + std::to_string(q) + " failed self-check: " + issues.front());
    }
  }
  if (options.check_girth) {
    if (girth(levi.graph()) != 6u) {
      throw std::logic_error("B_" + std::to_string(q) + " does not have girth 6");
    }
  }
  return levi;
}

bool translation_check(const LeviGraph& levi) {
  const std::uint32_t q = levi.q();
  const Graph& g = levi.graph();
  for (const Edge& e : g.edges()) {
    const VertexTag& a = levi.tag(e.u);
    const VertexTag& b = levi.tag(e.v);
    if (a.kind == b.kind) return false;
    const VertexTag& p = a.kind == VertexKind::Point ? a : b;
    const VertexTag& l = a.kind == VertexKind::Point ? b : a;
    for (std::uint32_t s = 1; s < q; ++s) {
      if (!g.has_edge(point_id(q, p.first, (p.second + s) % q),
                      line_id(q, l.first, (l.second + s) % q))) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace cageforge
