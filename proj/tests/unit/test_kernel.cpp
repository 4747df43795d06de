#include <gtest/gtest.h>

#include <tuple>

#include "fbranch/canon.hpp"
#include "fbranch/decomp.hpp"
#include "fbranch/errors.hpp"
#include "fbranch/generators.hpp"
#include "fbranch/kernel_fes.hpp"

using namespace fbranch;

namespace {

// K4 with every edge replaced by a path through `inner` new vertices.
Graph subdivided_k4(std::size_t inner) {
  std::vector<Edge> es;
  Vertex next = 4;
  for (Vertex a = 0; a < 4; ++a)
    for (Vertex b = a + 1; b < 4; ++b) {
      Vertex prev = a;
      for (std::size_t i = 0; i < inner; ++i) {
        es.emplace_back(prev, next);
        prev = next++;
      }
      es.emplace_back(prev, b);
    }
  return Graph(next, es);
}

}  // namespace

TEST(Fes, Examples) {
  Rng rng(1);
  EXPECT_TRUE(feedback_edge_set(random_tree(9, rng)).empty());
  EXPECT_EQ(feedback_edge_set(cycle_graph(5)).size(), 1u);
  Graph two_triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  EXPECT_EQ(feedback_edge_set(two_triangles).size(), 2u);
  // |E| - |V| + components, and removing the set leaves a forest.
  for (int i = 0; i < 100; ++i) {
    Graph g = random_graph(2 + i % 12, 0.3, rng);
    auto f = feedback_edge_set(g);
    EXPECT_EQ(f.size(), g.size() + connected_components(g).size() - g.order());
    EXPECT_TRUE(is_forest(remove_edges(g, f)));
  }
}

TEST(BridgeRule, Examples) {
  auto p5 = reduce_bridges_isolated(path_graph(5));
  EXPECT_EQ(p5.graph.order(), 0u);
  EXPECT_EQ(p5.bridges.size(), 4u);
  EXPECT_EQ(p5.isolated.size(), 5u);
  Graph c4p(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {2, 4}});
  auto r = reduce_bridges_isolated(c4p);
  EXPECT_EQ(r.graph, cycle_graph(4));
  EXPECT_EQ(r.isolated, (std::vector<Vertex>{4}));
  EXPECT_EQ(r.to_original, (std::vector<Vertex>{0, 1, 2, 3}));
  Graph th = theta_graph(1, 2, 3);
  EXPECT_EQ(reduce_bridges_isolated(th).graph, th);
}

TEST(UnimportantPath, Examples) {
  auto c12 = find_unimportant_path(cycle_graph(12), 8);
  ASSERT_TRUE(c12);
  EXPECT_EQ(c12->vertices.size(), 9u);
  EXPECT_TRUE(is_unimportant_path(cycle_graph(12), *c12));
  EXPECT_FALSE(find_unimportant_path(complete_graph(4), 1));
  // Hubs 0 and 1; the 10-vertex arc is the only run long enough.
  Graph th = theta_graph(1, 2, 10);
  auto p = find_unimportant_path(th, 8);
  ASSERT_TRUE(p);
  EXPECT_EQ(p->vertices.size(), 10u);
  for (Vertex v : p->vertices) EXPECT_EQ(th.degree(v), 2u);
  EXPECT_FALSE(find_unimportant_path(theta_graph(1, 2, 7), 8));
  EXPECT_FALSE(is_unimportant_path(th, UnimportantPath{{0, 2}}));
}

TEST(Contract, CycleShrinks) {
  auto p = find_unimportant_path(cycle_graph(12), 8);
  Graph c11 = contract_path_edge(cycle_graph(12), *p);
  EXPECT_TRUE(isomorphic(c11, cycle_graph(11)));
  EXPECT_THROW(contract_path_edge(cycle_graph(12), UnimportantPath{{0, 1, 2}}), Error);
  EXPECT_THROW(contract_edge(cycle_graph(5), 0, 2), Error);
}

TEST(Contract, PathInteriorStaysDegreeTwo) {
  Graph th = theta_graph(1, 2, 12);
  auto p = find_unimportant_path(th, 8);
  ASSERT_TRUE(p);
  auto [u, v] = contraction_edge(*p);
  Graph h = contract_path_edge(th, *p);
  for (Vertex x : p->vertices) {
    if (x == v) continue;
    Vertex y = x > v ? x - 1 : x;
    EXPECT_EQ(h.degree(y), 2u);
  }
  (void)u;
}

TEST(Contract, PreservesPrimalWidths) {
  for (auto [a, b, c] : {std::tuple{1, 2, 10}, std::tuple{0, 3, 9}, std::tuple{2, 2, 9}, std::tuple{0, 0, 12}}) {
    Graph g = theta_graph(a, b, c);
    auto p = find_unimportant_path(g, 8);
    ASSERT_TRUE(p);
    Graph h = contract_path_edge(g, *p);
    for (const auto& sel : primal_unions())
      EXPECT_EQ(exact_branchwidth_dp(g, sel).width, exact_branchwidth_dp(h, sel).width) << sel.to_string();
  }
}

TEST(Kernelize, Examples) {
  auto c12 = kernelize_fes(cycle_graph(12));
  EXPECT_EQ(c12.k, 1u);
  EXPECT_TRUE(isomorphic(c12.final_graph, cycle_graph(10)));
  EXPECT_EQ(c12.steps.size(), 2u);
  EXPECT_TRUE(c12.size_bound_met);
  auto c9 = kernelize_fes(cycle_graph(9));
  EXPECT_EQ(c9.final_graph, cycle_graph(9));
  EXPECT_TRUE(c9.steps.empty());
  Rng rng(2);
  auto tree = kernelize_fes(random_tree(8, rng));
  EXPECT_TRUE(tree.forest);
  EXPECT_EQ(tree.k, 0u);
  EXPECT_EQ(forest_width(tree.final_graph, FamilySelector::of({Family::Match})), 1u);
}

TEST(Kernelize, ReplayReproducesKernel) {
  Rng rng(3);
  for (int i = 0; i < 40; ++i) {
    Graph g = i % 2 ? cycle_with_pendants(9 + i % 8, i % 5, rng) : theta_graph(i % 4, 3 + i % 5, 8 + i % 6);
    auto t = kernelize_fes(g);
    EXPECT_EQ(replay(g, t.steps), t.final_graph);
    EXPECT_EQ(feedback_edge_set(t.final_graph).size(), t.k);
    EXPECT_TRUE(t.size_bound_met);
    EXPECT_LE(t.final_graph.order(), kernel_vertex_bound(t.k));
    EXPECT_LE(t.final_graph.size(), kernel_edge_bound(t.k));
  }
}

// Six arcs of eight degree-2 vertices: the longest unimportant path has length 7,
// yet 52 vertices exceed 18k - 8 = 46.
TEST(Kernelize, SizeBoundCanFailFromThreeCycles) {
  Graph g = subdivided_k4(6);
  auto t = kernelize_fes(g);
  EXPECT_EQ(t.k, 3u);
  EXPECT_EQ(g.order(), 4u + 6 * 6);
  // With 6 inner vertices per arc the graph is already below the bound.
  EXPECT_TRUE(t.size_bound_met);
  Graph big = subdivided_k4(8);
  auto tb = kernelize_fes(big);
  EXPECT_EQ(tb.k, 3u);
  EXPECT_EQ(big.order(), 52u);
  EXPECT_FALSE(find_unimportant_path(tb.final_graph, kContractMinLength));
  EXPECT_FALSE(tb.size_bound_met);
  EXPECT_GT(tb.final_graph.order(), kernel_vertex_bound(3));
}

TEST(Kernelize, TraceJson) {
  auto t = kernelize_fes(cycle_graph(12));
  auto js = trace_to_json(t);
  EXPECT_NE(js.find("\"schema\": \"fbranch/1\""), std::string::npos);
  EXPECT_NE(js.find("\"contract\""), std::string::npos);
}
