#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace oracle {

using fbranch::Family;
using fbranch::NatSequence;
using fbranch::Vertex;

NatSequence typical(NatSequence s) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
      if (s[i] == s[i + 1]) {
        s.erase(s.begin() + i + 1);
        changed = true;
        break;
      }
    if (changed) continue;
    for (std::size_t i = 0; i < s.size() && !changed; ++i)
      for (std::size_t j = i + 2; j < s.size() && !changed; ++j) {
        bool up = true, down = true;
        for (std::size_t k = i; k <= j; ++k) {
          up = up && s[i] <= s[k] && s[k] <= s[j];
          down = down && s[i] >= s[k] && s[k] >= s[j];
        }
        if (up || down) {
          s.erase(s.begin() + i + 1, s.begin() + j);
          changed = true;
        }
      }
  }
  return s;
}

namespace {

std::vector<std::vector<bool>> matrix(const Graph& g) {
  std::size_t n = g.order();
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
  for (auto [u, v] : g.edges()) m[u][v] = m[v][u] = true;
  return m;
}

bool family_edge(Family f, std::size_t i, std::size_t j) {
  switch (f) {
    case Family::Empty: return false;
    case Family::Match: return i == j;
    case Family::Chain: return i <= j;
    case Family::ChainStrict: return i < j;
    case Family::AntiMatch: return i != j;
    case Family::Complete: return true;
  }
  throw std::logic_error("family");
}

}  // namespace

std::size_t treewidth(const Graph& g) {
  std::size_t n = g.order();
  if (n == 0) return 0;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t best = n;
  auto base = matrix(g);
  do {
    auto m = base;
    std::vector<bool> gone(n, false);
    std::size_t width = 0;
    for (std::size_t v : perm) {
      std::vector<std::size_t> nb;
      for (std::size_t u = 0; u < n; ++u)
        if (!gone[u] && m[v][u]) nb.push_back(u);
      width = std::max(width, nb.size());
      for (std::size_t a : nb)
        for (std::size_t b : nb)
          if (a != b) m[a][b] = true;
      gone[v] = true;
    }
    best = std::min(best, width);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::size_t treedepth(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) return 0;
  // parent[v] = n means root
  std::vector<std::size_t> parent(n, 0);
  std::size_t best = n;
  auto m = matrix(g);
  std::function<void(std::size_t)> rec = [&](std::size_t v) {
    if (v == n) {
      std::vector<std::size_t> depth(n, 0);
      for (std::size_t u = 0; u < n; ++u) {
        std::size_t d = 1, w = u;
        while (parent[w] != n) {
          w = parent[w];
          if (++d > n) return;  // cycle
        }
        depth[u] = d;
      }
      auto ancestor = [&](std::size_t a, std::size_t b) {
        for (std::size_t w = b; w != n; w = parent[w])
          if (w == a) return true;
        return false;
      };
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
          if (m[a][b] && !ancestor(a, b) && !ancestor(b, a)) return;
      best = std::min(best, *std::max_element(depth.begin(), depth.end()));
      return;
    }
    for (std::size_t p = 0; p <= n; ++p) {
      if (p == v) continue;
      parent[v] = p;
      rec(v + 1);
    }
  };
  rec(0);
  return best;
}

std::size_t pattern_value(const Graph& g, std::uint64_t x_mask, Family f) {
  const std::size_t n = g.order();
  std::vector<Vertex> xs, ys;
  for (Vertex v = 0; v < n; ++v) (x_mask >> v & 1 ? xs : ys).push_back(v);
  auto m = matrix(g);
  std::size_t best = 0;
  for (int orient = 0; orient < 2; ++orient) {
    const auto& as = orient ? ys : xs;
    const auto& bs = orient ? xs : ys;
    std::vector<Vertex> pa, pb;
    std::function<void()> rec = [&] {
      best = std::max(best, pa.size());
      for (Vertex a : as) {
        if (std::find(pa.begin(), pa.end(), a) != pa.end()) continue;
        for (Vertex b : bs) {
          if (std::find(pb.begin(), pb.end(), b) != pb.end()) continue;
          std::size_t k = pa.size();
          bool ok = m[a][b] == family_edge(f, k, k);
          for (std::size_t i = 0; ok && i < k; ++i)
            ok = m[pa[i]][b] == family_edge(f, i, k) && m[a][pb[i]] == family_edge(f, k, i);
          if (!ok) continue;
          pa.push_back(a);
          pb.push_back(b);
          rec();
          pa.pop_back();
          pb.pop_back();
        }
      }
    };
    rec();
  }
  return best;
}

std::size_t twin_classes(const Graph& g, std::uint64_t x_mask) {
  std::set<std::vector<Vertex>> seen;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!(x_mask >> v & 1)) continue;
    std::vector<Vertex> out;
    for (Vertex u : g.neighbors(v))
      if (!(x_mask >> u & 1)) out.push_back(u);
    seen.insert(out);
  }
  return seen.size();
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<Vertex> p(a.order());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (auto [u, v] : a.edges())
      if (!b.adjacent(p[u], p[v])) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

std::size_t components(const Graph& g) {
  std::vector<std::size_t> root(g.order());
  std::iota(root.begin(), root.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) { return root[x] == x ? x : root[x] = find(root[x]); };
  std::size_t c = g.order();
  for (auto [u, v] : g.edges()) {
    auto a = find(u), b = find(v);
    if (a != b) {
      root[a] = b;
      --c;
    }
  }
  return c;
}

std::vector<std::pair<double, double>> edge_splits(const fbranch::Tree& t, const std::vector<double>& w) {
  std::vector<std::pair<double, double>> out;
  double total = std::accumulate(w.begin(), w.end(), 0.0);
  for (std::size_t e = 0; e < t.edges.size(); ++e) {
    // flood from edges[e].first without crossing e
    std::vector<bool> seen(t.node_count, false);
    std::vector<std::size_t> stack{t.edges[e].first};
    seen[t.edges[e].first] = true;
    double side = 0;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      side += w[v];
      for (std::size_t f = 0; f < t.edges.size(); ++f) {
        if (f == e) continue;
        auto [a, b] = t.edges[f];
        std::size_t other = a == v ? b : b == v ? a : t.node_count;
        if (other < t.node_count && !seen[other]) {
          seen[other] = true;
          stack.push_back(other);
        }
      }
    }
    out.emplace_back(side, total - side);
  }
  return out;
}

}  // namespace oracle
