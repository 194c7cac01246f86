#pragma once

// Serialization: graph6 (binary interchange), a sorted text edge list, and
// the certificate JSON document.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cageforge/certify.hpp"
#include "cageforge/graph.hpp"

namespace cageforge {

/// Largest order representable in graph6 (36-bit size field).
inline constexpr std::size_t kGraph6MaxOrder = 68719476735ull;

/// Standard graph6 encoding, no trailing newline. With `header`, the result is
/// prefixed by ">>graph6<<". Throws ConstructionError above kGraph6MaxOrder.
std::string to_graph6(const Graph& g, bool header = false);

/// Inverse of to_graph6. Accepts an optional ">>graph6<<" prefix and a single
/// trailing newline. Throws ParseError (with byte offset) for a malformed
/// size prefix, bytes outside 63..126, truncation, or trailing data.
Graph from_graph6(std::string_view bytes);

/// Ordered `# key=value` header lines written above the edges.
using EdgeListMeta = std::vector<std::pair<std::string, std::string>>;

/// "# n=<order>", then `meta`, then one "u v" line per edge (u < v), sorted.
std::string write_edge_list(const Graph& g, const EdgeListMeta& meta = {});

struct EdgeListDocument {
  Graph graph;
  EdgeListMeta meta;                  // every `# key=value` header, in order
  std::vector<std::string> warnings;  // e.g. duplicate edges
};

/// Parses an edge list. `#` lines are comments; `# key=value` lines are kept
/// as metadata and `# n=<count>` fixes the order (otherwise max id + 1).
/// Throws ParseError for non-integer tokens, lines without exactly two ids,
/// or ids >= n.
EdgeListDocument read_edge_list(std::string_view text);

/// Certificate as JSON with keys in the order: order, size, degrees, girth,
/// bipartite, moore_bound, excess, checks.
std::string certificate_json(const Certificate& c);

}  // namespace cageforge
