#include <algorithm>
#include <bit>
#include <functional>

#include "fbranch/errors.hpp"
#include "fbranch/prune_td.hpp"

namespace fbranch {

std::vector<std::vector<Vertex>> TreedepthDecomposition::children() const {
  std::vector<std::vector<Vertex>> out(parent.size());
  for (Vertex v = 0; v < parent.size(); ++v)
    if (parent[v] >= 0) out[std::size_t(parent[v])].push_back(v);
  return out;
}

VertexSet TreedepthDecomposition::subtree(Vertex v) const {
  VertexSet s(parent.size());
  for (Vertex w = 0; w < parent.size(); ++w)
    for (std::int64_t x = w; x >= 0; x = parent[std::size_t(x)])
      if (std::size_t(x) == v) {
        s.insert(w);
        break;
      }
  return s;
}

VertexSet TreedepthDecomposition::root_path(Vertex v) const {
  VertexSet s(parent.size());
  for (std::int64_t x = v; x >= 0; x = parent[std::size_t(x)]) s.insert(Vertex(x));
  return s;
}

TreedepthDecomposition treedepth_decomposition(const Graph& g, std::size_t limit) {
  const std::size_t n = g.order();
  if (n > limit) throw LimitExceeded("treedepth_decomposition", n, limit);
  std::vector<std::uint32_t> adj(n);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : g.neighbors(v)) adj[v] |= 1u << w;
  auto components = [&](std::uint32_t s) {
    std::vector<std::uint32_t> out;
    while (s) {
      std::uint32_t comp = s & (~s + 1), frontier = comp;
      while (frontier) {
        Vertex v = Vertex(std::countr_zero(frontier));
        frontier &= frontier - 1;
        std::uint32_t nb = adj[v] & s & ~comp;
        comp |= nb;
        frontier |= nb;
      }
      out.push_back(comp);
      s &= ~comp;
    }
    return out;
  };
  std::vector<std::uint8_t> memo(std::size_t{1} << n, 0xff);
  std::vector<std::int8_t> best_root(std::size_t{1} << n, -1);
  std::function<std::size_t(std::uint32_t)> td = [&](std::uint32_t s) -> std::size_t {
    if (!s) return 0;
    if (memo[s] != 0xff) return memo[s];
    auto comps = components(s);
    std::size_t r = 0;
    if (comps.size() > 1) {
      for (auto c : comps) r = std::max(r, td(c));
    } else {
      r = SIZE_MAX;
      for (std::uint32_t rest = s; rest; rest &= rest - 1) {
        Vertex v = Vertex(std::countr_zero(rest));
        std::size_t cand = 1 + td(s & ~(1u << v));
        if (cand < r) {
          r = cand;
          best_root[s] = std::int8_t(v);
        }
      }
    }
    memo[s] = std::uint8_t(r);
    return r;
  };
  TreedepthDecomposition out;
  out.parent.assign(n, -1);
  out.depth.assign(n, 0);
  const std::uint32_t full = n == 0 ? 0 : std::uint32_t((std::uint64_t{1} << n) - 1);
  out.height = td(full);
  // Root each component at its first optimal vertex; children are the components left over.
  std::function<void(std::uint32_t, std::int64_t, std::size_t)> build = [&](std::uint32_t s, std::int64_t par,
                                                                             std::size_t depth) {
    for (auto c : components(s)) {
      td(c);
      Vertex root = Vertex(best_root[c]);
      out.parent[root] = par;
      out.depth[root] = depth;
      if (par < 0) out.roots.push_back(root);
      build(c & ~(1u << root), root, depth + 1);
    }
  };
  build(full, -1, 1);
  return out;
}

bool closure_contains(const TreedepthDecomposition& td, const Graph& g) {
  if (td.parent.size() != g.order()) return false;
  for (auto [u, v] : g.edges())
    if (!td.root_path(u).contains(v) && !td.root_path(v).contains(u)) return false;
  return true;
}

}  // namespace fbranch
