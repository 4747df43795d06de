#include "fbranch/generators.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "fbranch/canon.hpp"

namespace fbranch {

Graph path_graph(std::size_t n) {
  std::vector<Edge> es;
  for (Vertex i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return Graph(n, es);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) return path_graph(n);
  std::vector<Edge> es;
  for (Vertex i = 0; i < n; ++i) es.emplace_back(i, Vertex((i + 1) % n));
  return Graph(n, es);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> es;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) es.emplace_back(i, j);
  return Graph(n, es);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> es;
  for (Vertex i = 0; i < a; ++i)
    for (Vertex j = 0; j < b; ++j) es.emplace_back(i, Vertex(a + j));
  return Graph(a + b, es);
}

Graph star_graph(std::size_t leaves) { return complete_bipartite(1, leaves); }

Graph spider_graph(const std::vector<std::size_t>& legs) {
  std::vector<Edge> es;
  Vertex next = 1;
  for (std::size_t len : legs) {
    Vertex prev = 0;
    for (std::size_t i = 0; i < len; ++i) {
      es.emplace_back(prev, next);
      prev = next++;
    }
  }
  return Graph(next, es);
}

Graph broom_graph(std::size_t handle, std::size_t bristles) {
  std::vector<Edge> es;
  for (Vertex i = 0; i + 1 < handle; ++i) es.emplace_back(i, i + 1);
  const Vertex tip = handle == 0 ? 0 : Vertex(handle - 1);
  const std::size_t base = handle == 0 ? 1 : handle;
  for (Vertex j = 0; j < bristles; ++j) es.emplace_back(tip, Vertex(base + j));
  return Graph(base + bristles, es);
}

Graph theta_graph(std::size_t a, std::size_t b, std::size_t c) {
  std::vector<Edge> es;
  Vertex next = 2;
  for (std::size_t len : {a, b, c}) {
    Vertex prev = 0;
    for (std::size_t i = 0; i < len; ++i) {
      es.emplace_back(prev, next);
      prev = next++;
    }
    es.emplace_back(prev, 1);
  }
  return Graph(next, es);
}

Graph random_graph(std::size_t n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> es;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (coin(rng)) es.emplace_back(i, j);
  return Graph(n, es);
}

Graph random_tree(std::size_t n, Rng& rng) {
  std::vector<Edge> es;
  for (Vertex v = 1; v < n; ++v) es.emplace_back(Vertex(std::uniform_int_distribution<std::size_t>(0, v - 1)(rng)), v);
  return Graph(n, es);
}

Graph cycle_with_pendants(std::size_t len, std::size_t extra, Rng& rng) {
  auto es = cycle_graph(len).edges();
  for (std::size_t v = len; v < len + extra; ++v)
    es.emplace_back(Vertex(std::uniform_int_distribution<std::size_t>(0, v - 1)(rng)), Vertex(v));
  return Graph(len + extra, es);
}

Graph random_spider(std::size_t max_n, Rng& rng) {
  std::vector<std::size_t> legs;
  std::size_t used = 1;
  const std::size_t leg_max = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
  while (used < max_n) {
    std::size_t len = std::min(std::uniform_int_distribution<std::size_t>(1, leg_max)(rng), max_n - used);
    legs.push_back(len);
    used += len;
    if (legs.size() >= 3 && std::uniform_int_distribution<int>(0, 5)(rng) == 0) break;
  }
  return spider_graph(legs);
}

Graph random_broom(std::size_t max_n, Rng& rng) {
  const std::size_t handle = std::uniform_int_distribution<std::size_t>(1, std::max<std::size_t>(1, max_n / 2))(rng);
  const std::size_t bristles = std::uniform_int_distribution<std::size_t>(1, max_n - handle)(rng);
  return broom_graph(handle, bristles);
}

Graph random_disconnected(std::size_t max_n, Rng& rng) {
  for (;;) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, max_n)(rng);
    const double p = std::uniform_real_distribution<double>(0.1, 0.7)(rng);
    Graph g = random_graph(n, p, rng);
    if (!is_connected(g)) return g;
  }
}

namespace {

// Extend each class on n-1 vertices by a new vertex with every neighbour subset.
std::vector<Graph> augment(const std::vector<Graph>& smaller, std::size_t n, std::size_t max_degree) {
  std::vector<Graph> out;
  std::set<std::string> seen;
  for (const auto& h : smaller) {
    auto base = h.edges();
    for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << (n - 1)); ++sub) {
      if (std::size_t(std::popcount(sub)) > max_degree) continue;
      auto es = base;
      bool ok = true;
      for (Vertex v = 0; v + 1 < n; ++v)
        if (sub >> v & 1) {
          if (h.degree(v) + 1 > max_degree) ok = false;
          es.emplace_back(v, Vertex(n - 1));
        }
      if (!ok) continue;
      Graph g(n, es);
      auto cf = canonical_form(g);
      if (!seen.insert(cf.code).second) continue;
      // Store the canonical relabelling so the output order is stable.
      std::vector<Vertex> pos(n);
      for (std::size_t i = 0; i < n; ++i) pos[cf.order[i]] = Vertex(i);
      std::vector<Edge> relabelled;
      for (auto [u, v] : g.edges()) relabelled.emplace_back(pos[u], pos[v]);
      out.emplace_back(n, relabelled);
    }
  }
  return out;
}

}  // namespace

std::vector<Graph> graph_classes(std::size_t n) {
  static std::map<std::size_t, std::vector<Graph>> cache;
  static std::mutex mu;
  std::lock_guard lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  std::vector<Graph> cur{Graph(0)};
  for (std::size_t k = 1; k <= n; ++k) {
    if (auto it = cache.find(k); it != cache.end()) {
      cur = it->second;
      continue;
    }
    cur = augment(cur, k, k);
    cache[k] = cur;
  }
  cache[n] = cur;
  return cur;
}

std::vector<Graph> connected_graph_classes(std::size_t n) {
  std::vector<Graph> out;
  for (auto& g : graph_classes(n))
    if (is_connected(g)) out.push_back(g);
  return out;
}

std::vector<Graph> subcubic_tree_shapes(std::size_t n) {
  if (n == 0) return {};
  std::vector<Graph> cur{Graph(1)};
  for (std::size_t k = 2; k <= n; ++k) {
    std::vector<Graph> next;
    // A new leaf attaches to exactly one vertex.
    for (auto& g : augment(cur, k, 3))
      if (g.size() == k - 1) next.push_back(std::move(g));
    cur = std::move(next);
  }
  return cur;
}

}  // namespace fbranch
