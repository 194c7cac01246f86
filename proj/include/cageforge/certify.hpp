#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cageforge/graph.hpp"

namespace cageforge {

/// Moore bound n0(k, g): 1 + k * sum_{i<=(g-3)/2} (k-1)^i for odd g and
/// 2 * sum_{i<g/2} (k-1)^i for even g. Throws std::invalid_argument when
/// k < 2 or g < 3, std::overflow_error past 64 bits.
std::uint64_t moore_bound(std::uint64_t k, std::uint32_t g);

/// Properties a graph is expected to have. Each field is checked only when set.
struct Claim {
  std::optional<std::size_t> degree;
  std::optional<std::uint32_t> girth;
  std::optional<std::size_t> order;
};

struct CertificateCheck {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass;
};

struct Certificate {
  std::size_t order = 0;
  std::size_t size = 0;
  DegreeProfile degrees;
  /// Unset when girth was not computed; `acyclic` distinguishes forests.
  std::optional<std::uint32_t> girth;
  bool girth_computed = false;
  bool bipartite = false;
  std::optional<std::uint64_t> moore_bound;  // present for a (degree, girth) claim
  std::optional<std::int64_t> excess;        // only when the claimed girth is attained
  std::vector<CertificateCheck> checks;

  bool acyclic() const noexcept { return girth_computed && !girth; }
  bool passed() const;
};

struct CertifyOptions {
  /// Skip the girth computation (large graphs). A girth claim then fails.
  bool compute_girth = true;
  unsigned threads = 0;
};

/// Recomputes order, size, degree profile, girth and bipartiteness from the
/// graph alone and compares them with `claim`.
Certificate certify(const Graph& g, const Claim& claim = {}, const CertifyOptions& options = {});

}  // namespace cageforge
