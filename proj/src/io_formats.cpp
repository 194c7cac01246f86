#include "cageforge/io_formats.hpp"

#include <algorithm>
#include <charconv>
#include <optional>

#include <json.hpp>

#include "cageforge/error.hpp"

namespace cageforge {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

void put_size(std::string& out, std::size_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
    return;
  }
  const int groups = n <= 258047 ? 3 : 6;
  out.append(groups == 3 ? 1 : 2, '~');
  for (int i = groups - 1; i >= 0; --i) {
    out.push_back(static_cast<char>(((n >> (6 * i)) & 0x3f) + 63));
  }
}

}  // namespace

std::string to_graph6(const Graph& g, bool header) {
  const std::size_t n = g.order();
  if (n > kGraph6MaxOrder) throw ConstructionError("graph too large for graph6");
  std::string out;
  if (header) out.append(kGraph6Header);
  put_size(out, n);

  std::uint8_t group = 0;
  int filled = 0;
  std::vector<char> column(n, 0);
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex w : g.neighbors(j)) column[w] = 1;
    for (Vertex i = 0; i < j; ++i) {
      group = static_cast<std::uint8_t>((group << 1) | column[i]);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + 63));
        group = 0;
        filled = 0;
      }
    }
    for (Vertex w : g.neighbors(j)) column[w] = 0;
  }
  if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
  return out;
}

Graph from_graph6(std::string_view bytes) {
  std::size_t pos = 0;
  if (bytes.starts_with(kGraph6Header)) pos = kGraph6Header.size();
  // Strip one trailing newline (CRLF tolerated).
  std::size_t end = bytes.size();
  if (end > pos && bytes[end - 1] == '\n') --end;
  if (end > pos && bytes[end - 1] == '\r') --end;

  auto sextet = [&](std::size_t at) -> std::uint32_t {
    if (at >= end) throw ParseError("graph6 data truncated", at);
    const auto c = static_cast<unsigned char>(bytes[at]);
    if (c < 63 || c > 126) throw ParseError("graph6 byte outside 63..126", at);
    return c - 63u;
  };

  std::size_t n = 0;
  if (pos >= end) throw ParseError("graph6 size prefix missing", pos);
  if (bytes[pos] != '~') {
    n = sextet(pos++);
  } else {
    int groups = 3;
    ++pos;
    if (pos < end && bytes[pos] == '~') {
      groups = 6;
      ++pos;
    }
    const std::size_t start = pos;
    for (int i = 0; i < groups; ++i) n = (n << 6) | sextet(pos++);
    if ((groups == 3 && n <= 62) || (groups == 6 && n <= 258047)) {
      throw ParseError("graph6 size prefix not in canonical form", start);
    }
  }

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t need = (bits + 5) / 6;
  if (end - pos < need) throw ParseError("graph6 data truncated", end);

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const std::uint32_t s = sextet(pos + k / 6);
      if ((s >> (5 - k % 6)) & 1u) edges.push_back({i, j});
    }
  }
  if (pos + need != end) throw ParseError("trailing data after graph6 string", pos + need);
  return Graph::from_edges(n, edges);
}

std::string write_edge_list(const Graph& g, const EdgeListMeta& meta) {
  std::string out = "# n=" + std::to_string(g.order()) + "\n";
  for (const auto& [key, value] : meta) out += "# " + key + "=" + value + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

EdgeListDocument read_edge_list(std::string_view text) {
  EdgeListDocument doc;
  std::optional<std::size_t> declared_n;
  std::vector<std::pair<Edge, std::size_t>> raw;  // edge, line offset

  std::size_t line_start = 0;
  while (line_start < text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    const std::string_view line = trim(text.substr(line_start, line_end - line_start));

    if (line.starts_with('#')) {
      const std::string_view body = trim(line.substr(1));
      if (const auto eq = body.find('='); eq != std::string_view::npos) {
        std::string key(trim(body.substr(0, eq)));
        std::string value(trim(body.substr(eq + 1)));
        if (key == "n") {
          std::size_t n = 0;
          auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), n);
          if (ec != std::errc{} || p != value.data() + value.size()) {
            throw ParseError("bad '# n=' header", line_start);
          }
          declared_n = n;
        }
        doc.meta.emplace_back(std::move(key), std::move(value));
      }
    } else if (!line.empty()) {
      // Two unsigned decimal ids separated by whitespace.
      Vertex ids[2];
      std::size_t i = 0;
      const auto base = static_cast<std::size_t>(line.data() - text.data());
      std::size_t at = 0;
      while (at < line.size()) {
        if (line[at] == ' ' || line[at] == '\t') {
          ++at;
          continue;
        }
        if (i == 2) throw ParseError("more than two ids on an edge line", base + at);
        const char* first = line.data() + at;
        const char* last = line.data() + line.size();
        const char* stop = std::find_if(first, last, [](char c) { return c == ' ' || c == '\t'; });
        auto [p, ec] = std::from_chars(first, stop, ids[i]);
        if (ec != std::errc{} || p != stop) throw ParseError("non-integer token", base + at);
        ++i;
        at = static_cast<std::size_t>(stop - line.data());
      }
      if (i != 2) throw ParseError("edge line needs two ids", base);
      raw.push_back({{ids[0], ids[1]}, base});
    }
    line_start = line_end + 1;
  }

  std::size_t n = declared_n.value_or(0);
  if (!declared_n) {
    for (const auto& [e, off] : raw) n = std::max<std::size_t>(n, std::max(e.u, e.v) + 1);
  }
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (const auto& [e, off] : raw) {
    if (e.u >= n || e.v >= n) {
      throw ParseError("id " + std::to_string(std::max(e.u, e.v)) + " >= n=" + std::to_string(n),
                       off);
    }
    if (e.u == e.v) throw ParseError("self-loop " + std::to_string(e.u), off);
    edges.push_back(e.u < e.v ? e : Edge{e.v, e.u});
  }
  std::vector<Edge> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i] == sorted[i - 1]) {
      doc.warnings.push_back("duplicate edge " + std::to_string(sorted[i].u) + " " +
                             std::to_string(sorted[i].v) + " ignored");
    }
  }
  doc.graph = Graph::from_edges(n, edges);
  return doc;
}

std::string certificate_json(const Certificate& c) {
  nlohmann::ordered_json j;
  j["order"] = c.order;
  j["size"] = c.size;
  nlohmann::ordered_json degrees = nlohmann::ordered_json::object();
  for (const auto& [deg, count] : c.degrees) degrees[std::to_string(deg)] = count;
  j["degrees"] = degrees;
  if (!c.girth_computed) {
    j["girth"] = nullptr;
  } else if (c.girth) {
    j["girth"] = *c.girth;
  } else {
    j["girth"] = "acyclic";
  }
  j["bipartite"] = c.bipartite;
  j["moore_bound"] = c.moore_bound ? nlohmann::ordered_json(*c.moore_bound) : nullptr;
  j["excess"] = c.excess ? nlohmann::ordered_json(*c.excess) : nullptr;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& chk : c.checks) {
    j["checks"].push_back({{"name", chk.name},
                           {"expected", chk.expected},
                           {"actual", chk.actual},
                           {"pass", chk.pass}});
  }
  return j.dump(2) + "\n";
}

}  // namespace cageforge
