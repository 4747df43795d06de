#include "fbranch/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "fbranch/errors.hpp"

namespace fbranch {

Graph::Graph(std::size_t n) : adj_(n), nbr_sets_(n, VertexSet(n)) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : Graph(n) {
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw std::out_of_range("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loop edge");
    if (nbr_sets_[u].contains(v)) continue;
    nbr_sets_[u].insert(v);
    nbr_sets_[v].insert(u);
    ++m_;
  }
  for (std::size_t v = 0; v < n; ++v) adj_[v] = nbr_sets_[v].to_vector();
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t d = 0;
  for (const auto& a : adj_) d = std::max(d, a.size());
  return d;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

void Graph::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != order()) throw std::invalid_argument("label count mismatch");
  labels_ = std::move(labels);
}

bool BipartiteCutGraph::has_edge(Vertex x, Vertex y) const {
  return std::binary_search(crossing_edges.begin(), crossing_edges.end(), Edge{x, y});
}

BipartiteCutGraph BipartiteCutGraph::swapped() const {
  BipartiteCutGraph b{y_vertices, x_vertices, {}};
  for (auto [x, y] : crossing_edges) b.crossing_edges.emplace_back(y, x);
  std::sort(b.crossing_edges.begin(), b.crossing_edges.end());
  return b;
}

BipartiteCutGraph BipartiteCutGraph::complement() const {
  BipartiteCutGraph b{x_vertices, y_vertices, {}};
  for (Vertex x : x_vertices)
    for (Vertex y : y_vertices)
      if (!has_edge(x, y)) b.crossing_edges.emplace_back(x, y);
  std::sort(b.crossing_edges.begin(), b.crossing_edges.end());
  return b;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  InducedSubgraph out;
  out.to_original = s.to_vector();
  out.to_local.assign(g.order(), -1);
  for (std::size_t i = 0; i < out.to_original.size(); ++i) out.to_local[out.to_original[i]] = std::int64_t(i);
  std::vector<Edge> es;
  for (auto [u, v] : g.edges())
    if (out.to_local[u] >= 0 && out.to_local[v] >= 0)
      es.emplace_back(Vertex(out.to_local[u]), Vertex(out.to_local[v]));
  out.graph = Graph(out.to_original.size(), es);
  if (!g.labels().empty()) {
    std::vector<std::string> labels;
    for (Vertex v : out.to_original) labels.push_back(g.labels()[v]);
    out.graph.set_labels(std::move(labels));
  }
  return out;
}

Graph remove_edges(const Graph& g, std::span<const Edge> edges) {
  std::vector<Edge> drop(edges.begin(), edges.end());
  for (auto& e : drop)
    if (e.first > e.second) std::swap(e.first, e.second);
  std::sort(drop.begin(), drop.end());
  std::vector<Edge> keep;
  for (auto e : g.edges())
    if (!std::binary_search(drop.begin(), drop.end(), e)) keep.push_back(e);
  Graph h(g.order(), keep);
  h.set_labels(g.labels());
  return h;
}

Graph remove_vertices(const Graph& g, const VertexSet& s) { return induced_subgraph(g, s.complement()).graph; }

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto es = a.edges();
  const auto shift = Vertex(a.order());
  for (auto [u, v] : b.edges()) es.emplace_back(u + shift, v + shift);
  return Graph(a.order() + b.order(), es);
}

std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& within) {
  std::vector<VertexSet> out;
  VertexSet seen(g.order());
  std::vector<Vertex> stack;
  within.for_each([&](Vertex s) {
    if (seen.contains(s)) return;
    VertexSet comp(g.order());
    stack.push_back(s);
    seen.insert(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.insert(v);
      for (Vertex w : g.neighbors(v))
        if (within.contains(w) && !seen.contains(w)) {
          seen.insert(w);
          stack.push_back(w);
        }
    }
    out.push_back(std::move(comp));
  });
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g) { return connected_components(g, g.all()); }

bool is_connected(const Graph& g) { return g.order() <= 1 || connected_components(g).size() == 1; }

bool is_forest(const Graph& g) { return g.size() + connected_components(g).size() == g.order(); }

std::vector<Edge> bridges(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<Edge> out;
  int timer = 0;
  // Iterative DFS; frame = (vertex, parent, next neighbour index).
  struct Frame {
    Vertex v;
    std::int64_t parent;
    std::size_t next;
  };
  std::vector<Frame> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    disc[root] = low[root] = timer++;
    stack.push_back({root, -1, 0});
    while (!stack.empty()) {
      auto& f = stack.back();
      auto nbrs = g.neighbors(f.v);
      if (f.next < nbrs.size()) {
        Vertex w = nbrs[f.next++];
        if (std::int64_t(w) == f.parent) continue;  // simple graph: one parent edge
        if (disc[w] >= 0) {
          low[f.v] = std::min(low[f.v], disc[w]);
        } else {
          disc[w] = low[w] = timer++;
          stack.push_back({w, f.v, 0});
        }
        continue;
      }
      Frame done = f;
      stack.pop_back();
      if (done.parent >= 0) {
        auto p = Vertex(done.parent);
        low[p] = std::min(low[p], low[done.v]);
        if (low[done.v] > disc[p]) out.emplace_back(std::min(p, done.v), std::max(p, done.v));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

BipartiteCutGraph cut_graph(const Graph& g, const Cut& c) {
  BipartiteCutGraph b;
  for (Vertex v = 0; v < g.order(); ++v) (c.side_x.contains(v) ? b.x_vertices : b.y_vertices).push_back(v);
  for (Vertex x : b.x_vertices)
    for (Vertex y : g.neighbors(x))
      if (!c.side_x.contains(y)) b.crossing_edges.emplace_back(x, y);
  std::sort(b.crossing_edges.begin(), b.crossing_edges.end());
  return b;
}

VertexSet distance_neighborhood(const Graph& g, const VertexSet& s, std::size_t radius, Neighborhood kind) {
  VertexSet reached = s;
  std::vector<Vertex> frontier = s.to_vector();
  for (std::size_t step = 0; step < radius && !frontier.empty(); ++step) {
    std::vector<Vertex> next;
    for (Vertex v : frontier)
      for (Vertex w : g.neighbors(v))
        if (!reached.contains(w)) {
          reached.insert(w);
          next.push_back(w);
        }
    frontier = std::move(next);
  }
  if (kind == Neighborhood::Open) reached -= s;
  return reached;
}

std::size_t exact_treewidth(const Graph& g, std::size_t limit) {
  const std::size_t n = g.order();
  if (n > limit) throw LimitExceeded("exact_treewidth", n, limit);
  if (n == 0) return 0;
  std::vector<std::uint32_t> adj(n);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : g.neighbors(v)) adj[v] |= 1u << w;
  // q(S, v): vertices outside S + v reachable from v through S.
  auto q = [&](std::uint32_t s, Vertex v) {
    std::uint32_t seen = 1u << v, frontier = 1u << v, out = 0;
    while (frontier) {
      Vertex u = Vertex(std::countr_zero(frontier));
      frontier &= frontier - 1;
      std::uint32_t nb = adj[u] & ~seen;
      seen |= nb;
      out |= nb & ~s;
      frontier |= nb & s;
    }
    return std::popcount(out);
  };
  const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
  std::vector<int> tw(std::size_t(full) + 1, 0);
  tw[0] = -1;
  for (std::uint32_t s = 1; s <= full; ++s) {
    int best = 1 << 30;
    for (std::uint32_t rest = s; rest; rest &= rest - 1) {
      Vertex v = Vertex(std::countr_zero(rest));
      std::uint32_t prev = s & ~(1u << v);
      best = std::min(best, std::max(tw[prev], q(prev, v)));
    }
    tw[s] = best;
  }
  return std::size_t(std::max(tw[full], 0));
}

}  // namespace fbranch
