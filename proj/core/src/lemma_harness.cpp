#include "fbranch/lemma_harness.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "fbranch/decomp.hpp"
#include "fbranch/errors.hpp"
#include "fbranch/generators.hpp"
#include "fbranch/kernel_fes.hpp"
#include "fbranch/prune_td.hpp"
#include "fbranch/typseq.hpp"

namespace fbranch {
namespace {

constexpr std::size_t kMaxCounterexamples = 5;

class Suite {
 public:
  Suite(std::string name, const HarnessOptions& opts) : opts_(opts) { result_.name = std::move(name); }

  std::size_t width(const Graph& g, const FamilySelector& sel) const {
    std::size_t w = exact_branchwidth_dp(g, sel).width;
    return opts_.inject_fault ? w + 2 : w;
  }

  void check(bool ok, const std::function<std::string()>& describe) {
    ++result_.instances;
    if (ok) return;
    ++result_.violations;
    if (result_.counterexamples.size() < kMaxCounterexamples) result_.counterexamples.push_back(describe());
  }

  SuiteResult take() { return std::move(result_); }

 private:
  const HarnessOptions& opts_;
  SuiteResult result_;
};

std::string describe_graph(const Graph& g, const std::string& note) {
  return "# " + note + "\n" + write_graph(g);
}

std::size_t budget(const HarnessOptions& o, std::size_t dflt) { return o.n ? o.n : dflt; }

SuiteResult tw_bound(const HarnessOptions& o) {
  Suite s("tw-bound", o);
  const std::size_t nmax = std::min<std::size_t>(budget(o, 7), 8);
  for (std::size_t n = 1; n <= nmax; ++n)
    for (const auto& g : connected_graph_classes(n)) {
      const std::size_t tw = exact_treewidth(g);
      for (const auto& sel : primal_unions()) {
        std::size_t w = s.width(g, sel);
        s.check(w <= tw + 1, [&] {
          return describe_graph(g, sel.to_string() + " width " + std::to_string(w) + " > tw+1 = " + std::to_string(tw + 1));
        });
      }
    }
  return s.take();
}

SuiteResult component(const HarnessOptions& o) {
  Suite s("component", o);
  Rng rng(o.seed);
  const std::size_t nmax = budget(o, 8);
  for (int i = 0; i < 100; ++i) {
    Graph g = random_disconnected(nmax, rng);
    for (const auto& sel : primal_unions()) {
      std::size_t best = 0;
      for (const auto& c : connected_components(g)) best = std::max(best, s.width(induced_subgraph(g, c).graph, sel));
      // A non-adjacent pair across two components is an edgeless H^1_antimatch.
      const std::size_t expect = sel.contains(Family::AntiMatch) ? std::max<std::size_t>(best, 1) : best;
      std::size_t w = s.width(g, sel);
      s.check(w == expect, [&] {
        return describe_graph(g, sel.to_string() + " width " + std::to_string(w) + ", components give " + std::to_string(expect));
      });
    }
  }
  return s.take();
}

SuiteResult antichain(const HarnessOptions& o) {
  Suite s("antichain", o);
  const std::size_t nmax = std::min<std::size_t>(budget(o, 6), 7);
  const std::pair<FamilySelector, FamilySelector> pairs[] = {
      {FamilySelector::of({Family::ChainStrict, Family::Match}), FamilySelector::of({Family::Chain, Family::Match})},
      {FamilySelector::of({Family::ChainStrict}), FamilySelector::of({Family::Chain})}};
  for (std::size_t n = 1; n <= nmax; ++n)
    for (const auto& g : graph_classes(n))
      for (const auto& [a, b] : pairs) {
        std::size_t wa = s.width(g, a), wb = s.width(g, b);
        s.check(wa <= wb + 1 && wb <= wa + 1, [&] {
          return describe_graph(g, a.to_string() + " " + std::to_string(wa) + " vs " + b.to_string() + " " + std::to_string(wb));
        });
      }
  return s.take();
}

SuiteResult primal(const HarnessOptions& o) {
  Suite s("primal", o);
  const std::size_t nmax = std::min<std::size_t>(budget(o, 6), 7);
  const FamilySelector full = FamilySelector::all();
  for (std::size_t n = 1; n <= nmax; ++n)
    for (const auto& g : graph_classes(n)) {
      const std::size_t wf = s.width(g, full);
      for (const auto& star : primal_unions()) {
        const std::size_t opt = s.width(g, star);
        std::size_t worst = 0;
        for_each_decomposition(n, [&](const BranchDecomposition& bd) {
          if (decomposition_width(bd, g, star).width != opt) return;
          worst = std::max(worst, decomposition_width(bd, g, full).width);
        });
        s.check(worst <= 3 * wf, [&] {
          return describe_graph(g, star.to_string() + "-optimal tree has all-families width " + std::to_string(worst) +
                                       " > 3 * " + std::to_string(wf));
        });
      }
    }
  return s.take();
}

SuiteResult balanced(const HarnessOptions& o) {
  Suite s("balanced-trees", o);
  Rng rng(o.seed);
  const std::size_t nmax = budget(o, 12);
  for (std::size_t n = 2; n <= nmax; ++n)
    for (const auto& shape : subcubic_tree_shapes(n)) {
      Tree t;
      t.node_count = n;
      const auto shape_edges = shape.edges();
      t.edges.assign(shape_edges.begin(), shape_edges.end());
      for (int rep = 0; rep < 20; ++rep) {
        std::vector<double> w(n, 0.0);
        double total = 0;
        do {
          total = 0;
          for (Vertex v = 0; v < n; ++v) {
            w[v] = shape.degree(v) == 1 ? std::uniform_real_distribution<double>(0.05, 1.0)(rng) : 0.0;
            total += w[v];
          }
        } while (*std::max_element(w.begin(), w.end()) > 2 * total / 3);
        const std::size_t e = find_balanced_edge(t, w);
        Cut c = edge_cut(BranchDecomposition{t, [&] {
                                              std::vector<std::pair<NodeId, Vertex>> l;
                                              for (NodeId x = 0; x < n; ++x) l.emplace_back(x, x);
                                              return l;
                                            }()},
                         e);
        double side = 0;
        c.side_x.for_each([&](Vertex v) { side += w[v]; });
        const double lo = std::min(side, total - side);
        s.check(lo >= total / 3 - 1e-9 * total, [&] {
          return describe_graph(shape, "edge " + std::to_string(e) + " splits " + std::to_string(lo / total));
        });
      }
    }
  return s.take();
}

SuiteResult typ_bounds(const HarnessOptions& o) {
  Suite s("typ-bounds", o);
  const std::size_t kmax = std::min<std::size_t>(budget(o, 4), 5);
  for (std::size_t k = 0; k <= kmax; ++k) {
    auto all = enumerate_typical(k);
    const double cap = std::ceil(8.0 / 3.0 * std::pow(4.0, double(k)));
    s.check(double(all.size()) <= cap, [&] { return "k=" + std::to_string(k) + " count " + std::to_string(all.size()) + "\n"; });
    for (const auto& seq : all)
      s.check(seq.size() <= 2 * k + 1, [&] { return "k=" + std::to_string(k) + " long sequence " + format_sequence(seq) + "\n"; });
  }
  Rng rng(o.seed);
  auto random_seq = [&](std::size_t maxlen, Nat maxval) {
    NatSequence q(std::uniform_int_distribution<std::size_t>(1, maxlen)(rng));
    for (auto& x : q) x = std::uniform_int_distribution<Nat>(0, maxval)(rng);
    return q;
  };
  for (int i = 0; i < 2000; ++i) {
    auto a = random_seq(12, 6), b = random_seq(12, 6);
    const Nat z = std::uniform_int_distribution<Nat>(0, 5)(rng);
    auto ta = typical_of(a);
    bool ok = typical_of(ta) == ta && typical_of(concat(a, b)) == typical_of(concat(ta, typical_of(b))) &&
              typical_of(shift(a, z)) == shift(ta, z) && ta.size() <= a.size() &&
              *std::min_element(ta.begin(), ta.end()) == *std::min_element(a.begin(), a.end()) &&
              *std::max_element(ta.begin(), ta.end()) == *std::max_element(a.begin(), a.end());
    s.check(ok, [&] { return "laws fail on " + format_sequence(a) + " | " + format_sequence(b) + "\n"; });
  }
  for (int i = 0; i < 100; ++i) {
    auto a = typical_of(random_seq(5, 4)), b = typical_of(random_seq(5, 4));
    const std::size_t cap = a.size() + b.size();
    s.check(interleave(a, b, cap) == interleave(a, b, 2 * cap), [&] {
      return "interleave unstable on " + format_sequence(a) + " | " + format_sequence(b) + "\n";
    });
  }
  return s.take();
}

SuiteResult fes_safety(const HarnessOptions& o) {
  Suite s("fes-safety", o);
  Rng rng(o.seed);
  const std::size_t nmax = budget(o, 15);
  auto check_contractions = [&](const KernelTrace& t) {
    Graph cur = t.input;
    for (const auto& step : t.steps) {
      Graph next = replay(cur, {step});
      if (step.kind == KernelStep::Kind::Contract && cur.order() <= nmax)
        for (const auto& sel : primal_unions()) {
          std::size_t before = s.width(cur, sel), after = s.width(next, sel);
          s.check(before == after, [&] {
            return describe_graph(cur, sel.to_string() + " contraction changes width " + std::to_string(before) + " -> " +
                                           std::to_string(after));
          });
        }
      cur = std::move(next);
    }
    s.check(!t.size_bound_met || t.final_graph.order() <= kernel_vertex_bound(t.k),
            [&] { return describe_graph(t.input, "kernel too large"); });
    s.check(t.k > 2 || t.size_bound_met, [&] { return describe_graph(t.input, "kernel stopped above the bound"); });
  };
  for (int i = 0; i < 100; ++i) {
    const std::size_t len = std::uniform_int_distribution<std::size_t>(9, std::clamp<std::size_t>(nmax, 9, 12))(rng);
    const std::size_t extra = std::uniform_int_distribution<std::size_t>(0, nmax > len ? std::min<std::size_t>(nmax - len, 3) : 0)(rng);
    Graph g = cycle_with_pendants(len, extra, rng);
    auto t = kernelize_fes(g);
    // Removing bridges and isolated vertices keeps width, up to the floor of 1 for graphs with an edge.
    Graph after1 = reduce_bridges_isolated(g).graph;
    if (g.order() <= nmax)
      for (const auto& sel : primal_unions()) {
        std::size_t w = s.width(g, sel), w1 = s.width(after1, sel);
        s.check(w == std::max<std::size_t>(w1, g.size() ? 1 : 0), [&] {
          return describe_graph(g, sel.to_string() + " bridge rule: " + std::to_string(w) + " vs " + std::to_string(w1));
        });
      }
    check_contractions(t);
  }
  // Two cycles sharing a path: k = 2 and, at 14+ vertices, past 8k - 3.
  for (std::size_t a = 0; a <= 12; ++a)
    for (std::size_t b = a; b <= 12; ++b)
      for (std::size_t c = std::max<std::size_t>(b, 1); a + b + c + 2 <= nmax; ++c) {
        if (a + b + c + 2 < 14) continue;
        Graph g = theta_graph(a, b, c);
        auto p = find_unimportant_path(g, kContractMinLength);
        if (!p) continue;
        Graph h = contract_path_edge(g, *p);
        for (const auto& sel : primal_unions()) {
          std::size_t before = s.width(g, sel), after = s.width(h, sel);
          s.check(before == after, [&] { return describe_graph(g, sel.to_string() + " theta contraction changes width"); });
        }
      }
  return s.take();
}

SuiteResult prune_safety(const HarnessOptions& o) {
  Suite s("prune-safety", o);
  Rng rng(o.seed);
  const std::size_t nmax = std::min<std::size_t>(budget(o, 12), kTreedepthLimit);
  for (int i = 0; i < 50; ++i) {
    Graph g = i % 2 == 0 ? random_spider(nmax, rng) : random_broom(nmax, rng);
    auto rec = prune_by_treedepth(g, ThresholdPolicy::surrogate());
    for (const auto& sel : primal_unions()) {
      std::size_t before = s.width(g, sel), after = s.width(rec.graph, sel);
      s.check(before == after, [&] {
        return describe_graph(g, sel.to_string() + " pruning changes width " + std::to_string(before) + " -> " +
                                     std::to_string(after));
      });
    }
  }
  return s.take();
}

const std::vector<std::pair<std::string, std::function<SuiteResult(const HarnessOptions&)>>>& suites() {
  static const std::vector<std::pair<std::string, std::function<SuiteResult(const HarnessOptions&)>>> all = {
      {"tw-bound", tw_bound},       {"component", component},     {"antichain", antichain},
      {"primal", primal},           {"balanced-trees", balanced}, {"typ-bounds", typ_bounds},
      {"fes-safety", fes_safety},   {"prune-safety", prune_safety}};
  return all;
}

}  // namespace

std::vector<std::string> harness_suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : suites()) out.push_back(name);
  return out;
}

std::vector<SuiteResult> run_lemma_harness(const HarnessOptions& opts) {
  std::vector<SuiteResult> out;
  bool matched = false;
  for (const auto& [name, fn] : suites()) {
    if (opts.only && *opts.only != name) continue;
    matched = true;
    out.push_back(fn(opts));
  }
  if (opts.only && !matched) throw Error("unknown suite '" + *opts.only + "'");
  return out;
}

}  // namespace fbranch
