#include "cageforge/graph.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <queue>
#include <string>
#include <thread>

#include "cageforge/error.hpp"

namespace cageforge {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  std::vector<Edge> norm;
  norm.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw ConstructionError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                              ") has an id outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
    }
    if (e.u == e.v) {
      throw ConstructionError("self-loop (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                              ")");
    }
    norm.push_back(e.u < e.v ? e : Edge{e.v, e.u});
  }
  std::sort(norm.begin(), norm.end());
  norm.erase(std::unique(norm.begin(), norm.end()), norm.end());

  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (const Edge& e : norm) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
  g.targets_.resize(2 * norm.size());
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge& e : norm) {
    g.targets_[fill[e.u]++] = e.v;
    g.targets_[fill[e.v]++] = e.u;
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
              g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]));
  }
  return g;
}

bool Graph::has_edge(Vertex a, Vertex b) const noexcept {
  if (a >= order() || b >= order()) return false;
  auto nb = neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(size());
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

namespace {

constexpr std::uint32_t kUnseen = std::numeric_limits<std::uint32_t>::max();

// Per-worker BFS scratch space, reset lazily through the visit queue.
struct BfsScratch {
  explicit BfsScratch(std::size_t n) : dist(n, kUnseen), parent(n, 0) { queue.reserve(n); }

  std::vector<std::uint32_t> dist;
  std::vector<Vertex> parent;
  std::vector<Vertex> queue;
};

void lower_to(std::atomic<std::uint32_t>& best, std::uint32_t value) {
  std::uint32_t cur = best.load(std::memory_order_relaxed);
  while (value < cur && !best.compare_exchange_weak(cur, value, std::memory_order_relaxed)) {
  }
}

void girth_from(const Graph& g, Vertex s, BfsScratch& w, std::atomic<std::uint32_t>& best) {
  w.queue.clear();
  w.queue.push_back(s);
  w.dist[s] = 0;
  w.parent[s] = s;
  std::uint32_t local = best.load(std::memory_order_relaxed);
  for (std::size_t head = 0; head < w.queue.size(); ++head) {
    const Vertex x = w.queue[head];
    const std::uint32_t d = w.dist[x];
    if (2 * d + 1 >= local) break;
    for (Vertex y : g.neighbors(x)) {
      if (w.dist[y] == kUnseen) {
        w.dist[y] = d + 1;
        w.parent[y] = x;
        w.queue.push_back(y);
      } else if (y != w.parent[x]) {
        const std::uint32_t len = d + w.dist[y] + 1;
        if (len < local) {
          local = len;
          lower_to(best, len);
        }
      }
    }
  }
  for (Vertex v : w.queue) w.dist[v] = kUnseen;
}

}  // namespace

Girth girth(const Graph& g, unsigned threads) {
  const std::size_t n = g.order();
  if (n == 0) return std::nullopt;
  std::atomic<std::uint32_t> best{kUnseen};
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    BfsScratch scratch(n);
    constexpr std::size_t kChunk = 16;
    for (;;) {
      if (best.load(std::memory_order_relaxed) == 3) return;
      const std::size_t begin = next.fetch_add(kChunk, std::memory_order_relaxed);
      if (begin >= n) return;
      const std::size_t end = std::min(n, begin + kChunk);
      for (std::size_t s = begin; s < end; ++s) {
        girth_from(g, static_cast<Vertex>(s), scratch, best);
      }
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  // Small graphs are not worth the thread start-up.
  if (n < 256) threads = 1;
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  const std::uint32_t result = best.load();
  if (result == kUnseen) return std::nullopt;
  return result;
}

namespace {

struct CycleCounter {
  const Graph& g;
  std::uint32_t max_len;
  Vertex start = 0;
  std::vector<Vertex> path;
  std::vector<char> on_path;
  std::map<std::uint32_t, std::uint64_t> counts;

  void extend(Vertex x) {
    const auto len = static_cast<std::uint32_t>(path.size());
    for (Vertex y : g.neighbors(x)) {
      if (y == start) {
        // Count each cycle in one orientation only.
        if (len >= 3 && path[1] < path[len - 1]) ++counts[len];
      } else if (y > start && !on_path[y] && len < max_len) {
        on_path[y] = 1;
        path.push_back(y);
        extend(y);
        path.pop_back();
        on_path[y] = 0;
      }
    }
  }
};

}  // namespace

std::map<std::uint32_t, std::uint64_t> enumerate_short_cycles(const Graph& g,
                                                              std::uint32_t max_len) {
  CycleCounter c{g, max_len, 0, {}, {}, {}};
  if (max_len < 3) return {};
  c.on_path.assign(g.order(), 0);
  for (Vertex s = 0; s < g.order(); ++s) {
    c.start = s;
    c.path.assign(1, s);
    c.on_path[s] = 1;
    c.extend(s);
    c.on_path[s] = 0;
  }
  return std::move(c.counts);
}

DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile p;
  for (Vertex v = 0; v < g.order(); ++v) ++p[g.degree(v)];
  return p;
}

bool is_regular(const DegreeProfile& p, std::size_t k) {
  return p.size() == 1 && p.begin()->first == k;
}

bool is_biregular(const DegreeProfile& p, std::size_t k1, std::size_t k2) {
  if (p.empty()) return false;
  return std::all_of(p.begin(), p.end(),
                     [&](const auto& kv) { return kv.first == k1 || kv.first == k2; });
}

std::optional<Bipartition> bipartition(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> side(n, -1);
  std::queue<Vertex> q;
  for (Vertex root = 0; root < n; ++root) {
    if (side[root] != -1) continue;
    side[root] = 0;
    q.push(root);
    while (!q.empty()) {
      const Vertex x = q.front();
      q.pop();
      for (Vertex y : g.neighbors(x)) {
        if (side[y] == -1) {
          side[y] = 1 - side[x];
          q.push(y);
        } else if (side[y] == side[x]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition b;
  for (Vertex v = 0; v < n; ++v) (side[v] == 0 ? b.first : b.second).push_back(v);
  return b;
}

}  // namespace cageforge
