#include <algorithm>
#include <map>

#include "fbranch/canon.hpp"
#include "fbranch/errors.hpp"
#include "fbranch/prune_td.hpp"

namespace fbranch {

ComponentSignature component_signature(const Graph& g, const VertexSet& r, const VertexSet& comp) {
  if (g.order() > 64) throw LimitExceeded("component_signature", g.order(), 64);
  if (comp.empty() || comp.intersects(r)) throw Error("component must be non-empty and avoid r");
  auto inside = connected_components(g, g.all() - r);
  if (std::find(inside.begin(), inside.end(), comp) == inside.end()) throw Error("not a component of g - r");
  auto sub = induced_subgraph(g, comp);
  // Colour each vertex by the exact set of r-vertices it sees.
  std::vector<std::uint64_t> colors;
  for (Vertex v : sub.to_original) colors.push_back((g.neighbor_set(v) & r).mask());
  auto cf = canonical_form(sub.graph, colors);
  ComponentSignature s;
  s.code = cf.code;
  for (Vertex local : cf.order) s.gamma.push_back(g.neighbor_set(sub.to_original[local]) & r);
  return s;
}

namespace {

PruneRecord finish(const Graph& g, const VertexSet& removed, std::vector<std::vector<Vertex>> groups) {
  PruneRecord rec;
  auto sub = induced_subgraph(g, removed.complement());
  rec.graph = std::move(sub.graph);
  rec.to_original = std::move(sub.to_original);
  rec.removed = std::move(groups);
  return rec;
}

}  // namespace

PruneRecord prune_duplicates(const Graph& g, const VertexSet& r, std::size_t threshold) {
  if (threshold < 1) throw Error("threshold must be at least 1");
  std::map<std::string, std::size_t> seen;
  VertexSet removed(g.order());
  std::vector<std::vector<Vertex>> groups;
  for (const auto& comp : connected_components(g, g.all() - r)) {
    auto sig = component_signature(g, r, comp);
    if (++seen[sig.code] > threshold) {
      removed |= comp;
      groups.push_back(comp.to_vector());
    }
  }
  return finish(g, removed, std::move(groups));
}

mpz_class ThresholdPolicy::threshold(std::size_t t, std::size_t p) const {
  switch (kind) {
    case Kind::Fixed: return mpz_class(std::to_string(fixed));
    case Kind::Surrogate: return mpz_class(std::to_string(2 * t + 2 * p + 1));
    case Kind::ExactBound: return bound_g(mpz_class(std::to_string(t + 1)), mpz_class(std::to_string(p))).g;
  }
  return 0;
}

PruneRecord prune_by_treedepth(const Graph& g, const ThresholdPolicy& policy) {
  auto td = treedepth_decomposition(g);
  auto kids = td.children();
  std::vector<Vertex> order(g.order());
  for (Vertex v = 0; v < g.order(); ++v) order[v] = v;
  // Bottom-up by rank; within a rank by vertex id.
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return td.depth[a] > td.depth[b]; });
  VertexSet removed(g.order());
  std::vector<std::vector<Vertex>> groups;
  // Sentinel g.order() stands for a virtual node above the roots (R empty).
  order.push_back(Vertex(g.order()));
  for (Vertex t : order) {
    const bool top = t == g.order();
    const auto& children = top ? td.roots : kids[t];
    if ((!top && removed.contains(t)) || children.size() < 2) continue;
    // Child subtrees of t are components of G - R, R = t and its ancestors.
    const VertexSet r = top ? VertexSet(g.order()) : td.root_path(t);
    auto alive = induced_subgraph(g, removed.complement());
    VertexSet r_local(alive.graph.order());
    r.for_each([&](Vertex v) { r_local.insert(Vertex(alive.to_local[v])); });
    std::map<std::string, std::size_t> seen;
    for (Vertex c : children) {
      if (removed.contains(c)) continue;
      VertexSet comp_local(alive.graph.order());
      (td.subtree(c) - removed).for_each([&](Vertex v) { comp_local.insert(Vertex(alive.to_local[v])); });
      auto sig = component_signature(alive.graph, r_local, comp_local);
      const mpz_class limit = policy.threshold(td.height, comp_local.size());
      if (mpz_class(std::to_string(++seen[sig.code])) > limit) {
        std::vector<Vertex> comp;
        comp_local.for_each([&](Vertex v) { comp.push_back(alive.to_original[v]); });
        for (Vertex v : comp) removed.insert(v);
        groups.push_back(std::move(comp));
      }
    }
  }
  return finish(g, removed, std::move(groups));
}

namespace {

void guard(std::size_t bits) {
  if (bits > kBoundBitLimit) throw LimitExceeded("bound evaluation (bits)", bits, kBoundBitLimit);
}

std::size_t bits(const mpz_class& x) { return mpz_sizeinbase(x.get_mpz_t(), 2); }

unsigned long small(const mpz_class& x, const char* what) {
  if (!x.fits_ulong_p()) throw LimitExceeded(what, bits(x), 8 * sizeof(unsigned long));
  return x.get_ui();
}

}  // namespace

mpz_class bound_f_star(const mpz_class& k, const mpz_class& p, const mpz_class& l) {
  if (k < 1 || p < 1 || l < 1 || l > k) throw Error("bound_f_star needs 1 <= l <= k and p >= 1");
  // Unroll f*(k,p,l) = (3 * 2^k * f*(k,p,l+1)^4)^l * p from l = k downward.
  const unsigned long kk = small(k, "bound_f_star k"), lo = small(l, "bound_f_star l");
  mpz_class x = p;
  for (unsigned long level = kk - 1; level >= lo && level > 0; --level) {
    guard((4 * bits(x) + kk + 2) * level + bits(p));
    mpz_class base = x * x;
    base *= base;
    base *= 3;
    mpz_mul_2exp(base.get_mpz_t(), base.get_mpz_t(), kk);
    mpz_class powered;
    mpz_pow_ui(powered.get_mpz_t(), base.get_mpz_t(), level);
    x = powered * p;
  }
  return x;
}

mpz_class bound_f(const mpz_class& k, const mpz_class& p) {
  mpz_class x = bound_f_star(k, p, 1);
  guard(2 * bits(x));
  return x * x;
}

BoundG bound_g(const mpz_class& t, const mpz_class& p) {
  if (t < 1 || p < 1) throw Error("bound_g needs t, p >= 1");
  BoundG b;
  b.g4 = 4 * t + 4 * p + 1;
  b.g3 = 2 * b.g4 + 2;
  b.g2 = b.g3 * (6 * t - 1) + 6 * t;
  if (3 * b.g4 + 3 > b.g2) b.g2 = 3 * b.g4 + 3;
  b.g1 = bound_f(p, b.g2);
  const unsigned long e = small(p, "bound_g p");
  mpz_class base = 6 * t + 1;
  guard(std::size_t(e) * bits(base) + bits(b.g1));
  mpz_class powered;
  mpz_pow_ui(powered.get_mpz_t(), base.get_mpz_t(), e);
  b.g = powered * b.g1 + 1;
  return b;
}

mpz_class bound_h(std::size_t k, std::size_t j) {
  if (j < 1) throw Error("bound_h needs j >= 1");
  mpz_class h = 1;
  for (std::size_t level = 2; level <= j; ++level) {
    // 2^{C(h,2)} * 2^{(k+level-1) h} * g(k+1, h)
    mpz_class pairs = h * (h - 1) / 2;
    mpz_class exp = pairs + mpz_class(std::to_string(k + level - 1)) * h;
    const unsigned long e = small(exp, "bound_h exponent");
    guard(e);
    mpz_class g = bound_g(mpz_class(std::to_string(k + 1)), h).g;
    mpz_class next;
    mpz_mul_2exp(next.get_mpz_t(), g.get_mpz_t(), e);
    h = next;
  }
  return h;
}

}  // namespace fbranch
