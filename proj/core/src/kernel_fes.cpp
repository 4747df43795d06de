#include "fbranch/kernel_fes.hpp"

#include <algorithm>
#include <numeric>

#include <json.hpp>

#include "fbranch/errors.hpp"

namespace fbranch {

std::vector<Edge> feedback_edge_set(const Graph& g) {
  // Kruskal over edges in lexicographic order; rejected edges close cycles.
  std::vector<Vertex> parent(g.order());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<Edge> out;
  for (auto [u, v] : g.edges()) {
    Vertex a = find(u), b = find(v);
    if (a == b)
      out.emplace_back(u, v);
    else
      parent[a] = b;
  }
  return out;
}

BridgeReduction reduce_bridges_isolated(const Graph& g) {
  BridgeReduction r;
  r.bridges = bridges(g);
  Graph h = remove_edges(g, r.bridges);
  VertexSet keep(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    if (h.degree(v) == 0)
      r.isolated.push_back(v);
    else
      keep.insert(v);
  }
  auto sub = induced_subgraph(h, keep);
  r.graph = std::move(sub.graph);
  r.to_original = std::move(sub.to_original);
  return r;
}

bool is_unimportant_path(const Graph& g, const UnimportantPath& p) {
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    if (p.vertices[i] >= g.order() || g.degree(p.vertices[i]) != 2) return false;
    if (i > 0 && !g.adjacent(p.vertices[i - 1], p.vertices[i])) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (p.vertices[j] == p.vertices[i]) return false;
  }
  return !p.vertices.empty();
}

std::optional<UnimportantPath> find_unimportant_path(const Graph& g, std::size_t min_len) {
  const std::size_t n = g.order();
  auto deg2 = [&](Vertex v) { return g.degree(v) == 2; };
  std::vector<bool> seen(n, false);
  for (Vertex s = 0; s < n; ++s) {
    if (!deg2(s) || seen[s]) continue;
    // Collect the run of degree-2 vertices through s.
    std::vector<Vertex> run{s};
    seen[s] = true;
    for (std::size_t i = 0; i < run.size(); ++i)
      for (Vertex w : g.neighbors(run[i]))
        if (deg2(w) && !seen[w]) {
          seen[w] = true;
          run.push_back(w);
        }
    std::vector<Vertex> ends;
    for (Vertex v : run) {
      std::size_t inside = 0;
      for (Vertex w : g.neighbors(v)) inside += deg2(w) ? 1 : 0;
      if (inside < 2) ends.push_back(v);
    }
    UnimportantPath p;
    if (ends.empty()) {
      // A whole cycle component: take min_len + 1 vertices from its smallest vertex.
      if (run.size() < min_len + 1) continue;
      Vertex start = *std::min_element(run.begin(), run.end());
      Vertex prev = start, cur = std::min(g.neighbors(start)[0], g.neighbors(start)[1]);
      p.vertices.push_back(start);
      while (p.vertices.size() < min_len + 1) {
        p.vertices.push_back(cur);
        Vertex next = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1] : g.neighbors(cur)[0];
        prev = cur;
        cur = next;
      }
      return p;
    }
    if (run.size() < min_len + 1) continue;
    Vertex start = *std::min_element(ends.begin(), ends.end());
    Vertex prev = start;
    p.vertices.push_back(start);
    for (bool moved = true; moved;) {
      moved = false;
      for (Vertex w : g.neighbors(p.vertices.back()))
        if (deg2(w) && w != prev && std::find(p.vertices.begin(), p.vertices.end(), w) == p.vertices.end()) {
          prev = p.vertices.back();
          p.vertices.push_back(w);
          moved = true;
          break;
        }
    }
    return p;
  }
  return std::nullopt;
}

Graph contract_edge(const Graph& g, Vertex u, Vertex v) {
  if (u >= g.order() || v >= g.order() || !g.adjacent(u, v)) throw Error("contract_edge needs an edge");
  auto rename = [&](Vertex x) { return x == v ? (u > v ? u - 1 : u) : (x > v ? x - 1 : x); };
  std::vector<Edge> es;
  for (auto [a, b] : g.edges()) {
    if ((a == u && b == v) || (a == v && b == u)) continue;
    es.emplace_back(rename(a), rename(b));
  }
  return Graph(g.order() - 1, es);
}

Edge contraction_edge(const UnimportantPath& p) {
  const std::size_t i = (p.vertices.size() - 1) / 2;
  return {p.vertices[i], p.vertices[i + 1]};
}

Graph contract_path_edge(const Graph& g, const UnimportantPath& p, std::size_t min_len) {
  if (!is_unimportant_path(g, p)) throw Error("not an unimportant path");
  if (p.length() < min_len)
    throw Error("path too short: length " + std::to_string(p.length()) + " < " + std::to_string(min_len));
  auto [u, v] = contraction_edge(p);
  return contract_edge(g, u, v);
}

namespace {

void apply_rule1(Graph& g, std::vector<KernelStep>& steps) {
  auto r = reduce_bridges_isolated(g);
  if (r.bridges.empty() && r.isolated.empty()) return;
  steps.push_back({KernelStep::Kind::RemoveBridges, r.bridges, {}});
  steps.push_back({KernelStep::Kind::RemoveIsolated, {}, r.isolated});
  g = std::move(r.graph);
}

}  // namespace

KernelTrace kernelize_fes(const Graph& g) {
  KernelTrace t;
  t.input = g;
  t.k = feedback_edge_set(g).size();
  t.final_graph = g;
  if (t.k == 0) {
    t.forest = true;
    return t;
  }
  Graph cur = g;
  apply_rule1(cur, t.steps);
  const std::size_t bound = kernel_vertex_bound(t.k);
  while (cur.order() > bound) {
    auto p = find_unimportant_path(cur, kContractMinLength);
    // The counting argument for a long path only covers k <= 2; past that the
    // loop can legitimately run out of paths above the bound.
    if (!p) break;
    auto [u, v] = contraction_edge(*p);
    cur = contract_path_edge(cur, *p);
    t.steps.push_back({KernelStep::Kind::Contract, {{u, v}}, {}});
    // Contracting inside a degree-2 run cannot create a bridge; checked anyway.
    if (!bridges(cur).empty()) apply_rule1(cur, t.steps);
  }
  if (feedback_edge_set(cur).size() != t.k) throw InternalError("kernel changed the feedback edge set size");
  t.size_bound_met = cur.order() <= bound;
  t.final_graph = std::move(cur);
  return t;
}

Graph replay(const Graph& input, const std::vector<KernelStep>& steps) {
  Graph g = input;
  for (const auto& s : steps) {
    switch (s.kind) {
      case KernelStep::Kind::RemoveBridges: g = remove_edges(g, s.edges); break;
      case KernelStep::Kind::RemoveIsolated: g = remove_vertices(g, VertexSet::from_range(g.order(), s.vertices)); break;
      case KernelStep::Kind::Contract: g = contract_edge(g, s.edges.at(0).first, s.edges.at(0).second); break;
    }
  }
  return g;
}

std::string trace_to_json(const KernelTrace& t) {
  nlohmann::json j;
  j["schema"] = "fbranch/1";
  j["k"] = t.k;
  j["forest"] = t.forest;
  j["input"] = {{"n", t.input.order()}, {"m", t.input.size()}};
  j["final"] = {{"n", t.final_graph.order()}, {"m", t.final_graph.size()}};
  j["vertex_bound"] = kernel_vertex_bound(t.k);
  j["size_bound_met"] = t.size_bound_met;
  auto& steps = j["steps"] = nlohmann::json::array();
  for (const auto& s : t.steps) {
    nlohmann::json e;
    switch (s.kind) {
      case KernelStep::Kind::RemoveBridges:
        e["kind"] = "remove_bridges";
        e["edges"] = s.edges;
        break;
      case KernelStep::Kind::RemoveIsolated:
        e["kind"] = "remove_isolated";
        e["vertices"] = s.vertices;
        break;
      case KernelStep::Kind::Contract:
        e["kind"] = "contract";
        e["edge"] = {s.edges.at(0).first, s.edges.at(0).second};
        break;
    }
    steps.push_back(std::move(e));
  }
  return j.dump(2);
}

}  // namespace fbranch
