#include "cageforge/certify.hpp"

#include <algorithm>
#include <stdexcept>

namespace cageforge {

std::uint64_t moore_bound(std::uint64_t k, std::uint32_t g) {
  if (k < 2) throw std::invalid_argument("Moore bound needs degree k >= 2");
  if (g < 3) throw std::invalid_argument("Moore bound needs girth g >= 3");
  auto checked_add = [](std::uint64_t a, std::uint64_t b) {
    if (a > UINT64_MAX - b) throw std::overflow_error("Moore bound overflows 64 bits");
    return a + b;
  };
  auto checked_mul = [](std::uint64_t a, std::uint64_t b) {
    if (b != 0 && a > UINT64_MAX / b) throw std::overflow_error("Moore bound overflows 64 bits");
    return a * b;
  };
  // sum_{i=0}^{terms-1} (k-1)^i
  auto geometric = [&](std::uint32_t terms) {
    std::uint64_t sum = 0;
    std::uint64_t power = 1;
    for (std::uint32_t i = 0; i < terms; ++i) {
      sum = checked_add(sum, power);
      if (i + 1 < terms) power = checked_mul(power, k - 1);
    }
    return sum;
  };
  if (g % 2 == 1) return checked_add(1, checked_mul(k, geometric((g - 3) / 2 + 1)));
  return checked_mul(2, geometric(g / 2));
}

bool Certificate::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CertificateCheck& c) { return c.pass; });
}

namespace {

std::string profile_str(const DegreeProfile& p) {
  std::string s;
  for (const auto& [deg, count] : p) {
    if (!s.empty()) s += ",";
    s += std::to_string(deg) + ":" + std::to_string(count);
  }
  return "{" + s + "}";
}

}  // namespace

Certificate certify(const Graph& g, const Claim& claim, const CertifyOptions& options) {
  Certificate c;
  c.order = g.order();
  c.size = g.size();
  c.degrees = degree_profile(g);
  c.bipartite = bipartition(g).has_value();
  if (options.compute_girth) {
    c.girth = girth(g, options.threads);
    c.girth_computed = true;
  }

  if (claim.degree) {
    c.checks.push_back({"regular", std::to_string(*claim.degree) + "-regular",
                        profile_str(c.degrees), is_regular(c.degrees, *claim.degree)});
  }
  if (claim.girth) {
    std::string actual = !c.girth_computed ? "not computed"
                         : c.girth         ? std::to_string(*c.girth)
                                           : "acyclic";
    c.checks.push_back({"girth", std::to_string(*claim.girth), actual,
                        c.girth_computed && c.girth == *claim.girth});
  }
  if (claim.order) {
    c.checks.push_back({"order", std::to_string(*claim.order), std::to_string(c.order),
                        c.order == *claim.order});
  }
  if (claim.degree && claim.girth && *claim.degree >= 2 && *claim.girth >= 3) {
    c.moore_bound = moore_bound(*claim.degree, *claim.girth);
    if (c.girth_computed && c.girth == *claim.girth) {
      c.excess = static_cast<std::int64_t>(c.order) - static_cast<std::int64_t>(*c.moore_bound);
    }
  }
  return c;
}

}  // namespace cageforge
