#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>

#include "fbranch/decomp.hpp"
#include "fbranch/errors.hpp"
#include "fbranch/generators.hpp"
#include "fbranch/parallel.hpp"

namespace fbranch {
namespace {

constexpr std::uint16_t kUnknown = std::numeric_limits<std::uint16_t>::max();

// f(X) = f(V \ X), so only masks holding vertex 0 are stored (index = mask >> 1).
class CutTable {
 public:
  CutTable(const Graph& g, const FamilySelector& sel) : eval_(g, sel), n_(g.order()) {
    full_ = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  }

  void fill(std::size_t threads) {
    const std::size_t count = n_ == 0 ? 0 : std::size_t{1} << (n_ - 1);
    table_.assign(count, kUnknown);
    parallel_for(count, [&](std::size_t i) { table_[i] = std::uint16_t(eval_.value((std::uint64_t(i) << 1) | 1)); },
                 threads);
  }
  void lazy() { table_.assign(n_ == 0 ? 0 : std::size_t{1} << (n_ - 1), kUnknown); }

  std::size_t operator()(std::uint64_t x) {
    if (!(x & 1)) x = full_ & ~x;
    auto& slot = table_[x >> 1];
    if (slot == kUnknown) slot = std::uint16_t(eval_.value(x));
    return slot;
  }
  std::uint64_t full() const { return full_; }

 private:
  CutEvaluator eval_;
  std::size_t n_;
  std::uint64_t full_ = 0;
  std::vector<std::uint16_t> table_;
};

std::vector<std::uint64_t> edge_masks(const BranchDecomposition& bd) {
  std::vector<std::uint64_t> out;
  for (const auto& c : edge_cuts(bd)) out.push_back(c.side_x.mask());
  return out;
}

Solution trivial_solution(const Graph& g, const FamilySelector& sel) {
  Solution s;
  for_each_decomposition(g.order(), [&](const BranchDecomposition& bd) { s.decomposition = bd; });
  s.width = decomposition_width(s.decomposition, g, sel).width;
  return s;
}

Solution dp_connected(const Graph& g, const FamilySelector& sel, std::size_t threads) {
  const std::size_t n = g.order();
  if (n <= 2) return trivial_solution(g, sel);
  CutTable f(g, sel);
  f.fill(threads);
  const std::uint64_t full = f.full();
  std::vector<std::uint8_t> best(std::size_t{1} << n, 0);
  std::vector<std::uint16_t> split(std::size_t{1} << n, 0);
  for (std::uint64_t s = 1; s <= full; ++s) {
    if (std::popcount(s) < 2) continue;
    const std::uint64_t low = s & (~s + 1), rest = s ^ low;
    std::size_t b = std::numeric_limits<std::size_t>::max();
    std::uint64_t arg = 0;
    // s1 always holds the lowest vertex, so each unordered split is seen once.
    for (std::uint64_t sub = (rest - 1) & rest;; sub = (sub - 1) & rest) {
      const std::uint64_t s1 = low | sub, s2 = s ^ s1;
      std::size_t v = std::max<std::size_t>({best[s1], best[s2]});
      if (v < b) {
        v = std::max({v, f(s1), f(s2)});
        if (v < b) {
          b = v;
          arg = s1;
        }
      }
      if (sub == 0) break;
    }
    best[s] = std::uint8_t(b);
    split[s] = std::uint16_t(arg);
  }
  std::size_t root_best = std::numeric_limits<std::size_t>::max();
  std::uint64_t root_a = 0;
  // Root edge {A, V \ A} with vertex 0 in A.
  for (std::uint64_t sub = 0; sub < (full >> 1); ++sub) {
    const std::uint64_t a = (sub << 1) | 1, rest = full ^ a;
    std::size_t v = std::max({f(a), std::size_t(best[a]), std::size_t(best[rest])});
    if (v < root_best) {
      root_best = v;
      root_a = a;
    }
  }
  Solution sol;
  sol.width = root_best;
  auto& t = sol.decomposition.tree;
  t.node_count = n;
  for (Vertex v = 0; v < n; ++v) sol.decomposition.leaves.emplace_back(v, v);
  std::function<NodeId(std::uint64_t)> build = [&](std::uint64_t s) -> NodeId {
    if (std::popcount(s) == 1) return NodeId(std::countr_zero(s));
    const NodeId self = NodeId(t.node_count++);
    const std::uint64_t s1 = split[s];
    NodeId c1 = build(s1), c2 = build(s ^ s1);
    t.edges.emplace_back(self, c1);
    t.edges.emplace_back(self, c2);
    return self;
  };
  NodeId ra = build(root_a), rb = build(full ^ root_a);
  t.edges.emplace_back(ra, rb);
  return sol;
}

}  // namespace

Solution exact_branchwidth_enum(const Graph& g, const FamilySelector& sel, std::size_t limit) {
  const std::size_t n = g.order();
  if (n > limit) throw LimitExceeded("exact_branchwidth_enum", n, limit);
  if (n <= 2) return trivial_solution(g, sel);
  CutTable f(g, sel);
  f.lazy();
  Solution best;
  bool have = false;
  for_each_decomposition(n, [&](const BranchDecomposition& bd) {
    std::size_t w = 0;
    for (auto m : edge_masks(bd)) {
      w = std::max(w, f(m));
      if (have && w >= best.width) return;
    }
    if (!have || w < best.width) {
      best.width = w;
      best.decomposition = bd;
      have = true;
    }
  }, limit);
  return best;
}

Solution exact_branchwidth_dp(const Graph& g, const FamilySelector& sel, std::size_t limit, std::size_t threads) {
  const std::size_t n = g.order();
  if (n > limit) throw LimitExceeded("exact_branchwidth_dp", n, limit);
  auto comps = connected_components(g);
  if (comps.size() <= 1 || !sel.component_safe()) return dp_connected(g, sel, threads);
  // Solve components separately and join; the joined tree is then re-evaluated.
  BranchDecomposition joined;
  for (const auto& c : comps) {
    auto sub = induced_subgraph(g, c);
    auto part = dp_connected(sub.graph, sel, threads);
    joined = join_components(joined, relabel_vertices(part.decomposition, sub.to_original));
  }
  Solution sol;
  sol.width = decomposition_width(joined, g, sel).width;
  sol.decomposition = std::move(joined);
  return sol;
}

std::size_t forest_width(const Graph& forest, const FamilySelector& sel) {
  if (!is_forest(forest)) throw Error("forest_width needs a forest");
  if (!sel.is_primal_union()) throw Error("forest_width needs a primal-family selector");
  const std::size_t n = forest.order();
  const bool has_edge = forest.size() > 0;
  // Some pair of vertices is non-adjacent unless the forest is K1 or K2.
  const bool has_non_edge = n >= 3 || (n == 2 && !has_edge);
  if (has_edge && (sel.contains(Family::Match) || sel.contains(Family::Chain))) return 1;
  if (has_non_edge && sel.contains(Family::AntiMatch)) return 1;
  return 0;
}

namespace {

class Greedy {
 public:
  Greedy(const Graph& g, const FamilySelector& sel, std::uint64_t seed) : g_(g), sel_(sel), rng_(seed) {
    if (g.order() <= 64) eval_.emplace(g, sel);
  }

  std::size_t f(const VertexSet& x) const {
    if (eval_) return eval_->value(x.mask());
    return family_cut_value(g_, Cut{x}, sel_).value;
  }

  // Balanced split of s minimising the larger side value, by single-vertex moves.
  std::pair<VertexSet, VertexSet> split(const VertexSet& s) {
    auto vs = s.to_vector();
    std::shuffle(vs.begin(), vs.end(), rng_);
    const std::size_t k = vs.size(), lo = (k + 2) / 3, hi = std::max<std::size_t>(lo, 2 * k / 3);
    VertexSet a(g_.order()), b(g_.order());
    for (std::size_t i = 0; i < k; ++i) (i < k / 2 ? a : b).insert(vs[i]);
    auto score = [&](const VertexSet& x, const VertexSet& y) {
      std::size_t fx = f(x), fy = f(y);
      return std::pair{std::max(fx, fy), fx + fy};
    };
    auto cur = score(a, b);
    for (int pass = 0; pass < 32; ++pass) {
      bool improved = false;
      for (Vertex v : vs) {
        VertexSet& from = a.contains(v) ? a : b;
        VertexSet& to = a.contains(v) ? b : a;
        if (from.size() <= lo || to.size() >= hi) continue;
        from.erase(v);
        to.insert(v);
        auto cand = score(a, b);
        if (cand < cur) {
          cur = cand;
          improved = true;
        } else {
          to.erase(v);
          from.insert(v);
        }
      }
      if (!improved) break;
    }
    return {a, b};
  }

  NodeId build(const VertexSet& s, BranchDecomposition& bd) {
    if (s.size() == 1) return NodeId(*s.first());
    auto [a, b] = split(s);
    const NodeId self = NodeId(bd.tree.node_count++);
    NodeId ca = build(a, bd), cb = build(b, bd);
    bd.tree.edges.emplace_back(self, ca);
    bd.tree.edges.emplace_back(self, cb);
    return self;
  }

 private:
  const Graph& g_;
  FamilySelector sel_;
  Rng rng_;
  std::optional<CutEvaluator> eval_;
};

}  // namespace

Solution greedy_branchwidth(const Graph& g, const FamilySelector& sel, std::uint64_t seed) {
  const std::size_t n = g.order();
  if (n <= 2) return trivial_solution(g, sel);
  Greedy gr(g, sel, seed);
  Solution sol;
  auto& bd = sol.decomposition;
  bd.tree.node_count = n;
  for (Vertex v = 0; v < n; ++v) bd.leaves.emplace_back(v, v);
  auto [a, b] = gr.split(g.all());
  NodeId ra = gr.build(a, bd), rb = gr.build(b, bd);
  bd.tree.edges.emplace_back(ra, rb);
  sol.width = decomposition_width(bd, g, sel).width;
  return sol;
}

}  // namespace fbranch
