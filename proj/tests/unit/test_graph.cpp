#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "../support/oracles.hpp"
#include "fbranch/canon.hpp"
#include "fbranch/errors.hpp"
#include "fbranch/generators.hpp"
#include "fbranch/graph.hpp"

using namespace fbranch;

namespace {

ParseErrorKind parse_kind(const std::string& text) {
  try {
    parse_graph(text);
  } catch (const ParseError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error for: " << text;
  return ParseErrorKind::Malformed;
}

}  // namespace

TEST(VertexSet, BasicOps) {
  VertexSet s(70, {0, 3, 64, 69});
  EXPECT_EQ(s.size(), 4u);
  EXPECT_TRUE(s.contains(64));
  EXPECT_FALSE(s.contains(65));
  EXPECT_EQ(s.first(), Vertex(0));
  auto c = s.complement();
  EXPECT_EQ(c.size(), 66u);
  EXPECT_FALSE(c.intersects(s));
  EXPECT_EQ((c | s), VertexSet::full(70));
  s.erase(0);
  EXPECT_EQ(s.first(), Vertex(3));
  EXPECT_EQ(s.to_vector(), (std::vector<Vertex>{3, 64, 69}));
  EXPECT_TRUE(VertexSet(70, {3}).is_subset_of(s));
  EXPECT_EQ(VertexSet::from_mask(5, 0b10110).to_vector(), (std::vector<Vertex>{1, 2, 4}));
  EXPECT_EQ(VertexSet(5, {1, 2, 4}).mask(), 0b10110u);
  EXPECT_THROW(VertexSet(3) | VertexSet(4), std::invalid_argument);
}

TEST(Parse, Examples) {
  Graph k2 = parse_graph("2 1\n0 1");
  EXPECT_EQ(k2.order(), 2u);
  EXPECT_EQ(k2.size(), 1u);
  Graph e3 = parse_graph("3 0");
  EXPECT_EQ(e3.order(), 3u);
  EXPECT_EQ(e3.size(), 0u);
  Graph c6 = parse_graph("6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0");
  EXPECT_EQ(c6, cycle_graph(6));
}

TEST(Parse, Errors) {
  EXPECT_EQ(parse_kind(""), ParseErrorKind::Malformed);
  EXPECT_EQ(parse_kind("2 1\n0 x"), ParseErrorKind::Malformed);
  EXPECT_EQ(parse_kind("2 2\n0 1"), ParseErrorKind::Malformed);
  EXPECT_EQ(parse_kind("2 1\n0 1\n1 0"), ParseErrorKind::Malformed);
  EXPECT_EQ(parse_kind("2 1\n0 2"), ParseErrorKind::OutOfRange);
  EXPECT_EQ(parse_kind("2 1\n1 1"), ParseErrorKind::Loop);
}

TEST(Parse, RoundTrip) {
  Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    Graph g = random_graph(1 + i % 9, 0.4, rng);
    EXPECT_EQ(parse_graph(write_graph(g)), g);
  }
  EXPECT_EQ(graph_to_json(path_graph(3)), R"({"edges":[[0,1],[1,2]],"n":3})");
}

TEST(Graph, ConstructionDedupsAndRejects) {
  Graph g(3, {{0, 1}, {1, 0}, {1, 2}});
  EXPECT_EQ(g.size(), 2u);
  EXPECT_THROW(Graph(2, {{0, 0}}), std::invalid_argument);
  EXPECT_THROW(Graph(2, {{0, 2}}), std::out_of_range);
}

TEST(Graph, InducedSubgraph) {
  auto p3 = induced_subgraph(cycle_graph(6), VertexSet(6, {0, 1, 2}));
  EXPECT_EQ(p3.graph, path_graph(3));
  EXPECT_EQ(p3.to_original, (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(p3.to_local[4], -1);
  EXPECT_EQ(induced_subgraph(complete_graph(5), VertexSet(5)).graph.order(), 0u);
  EXPECT_EQ(induced_subgraph(complete_graph(4), VertexSet(4, {0, 2, 3})).graph, complete_graph(3));
}

TEST(Graph, Components) {
  Graph two_k2(4, {{0, 1}, {2, 3}});
  auto cs = connected_components(two_k2);
  ASSERT_EQ(cs.size(), 2u);
  EXPECT_EQ(cs[0].size(), 2u);
  EXPECT_EQ(cs[1].size(), 2u);
  EXPECT_EQ(connected_components(cycle_graph(6)).size(), 1u);
  EXPECT_EQ(connected_components(Graph(3)).size(), 3u);
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    Graph g = random_graph(1 + i % 10, 0.25, rng);
    EXPECT_EQ(connected_components(g).size(), oracle::components(g));
  }
}

TEST(Graph, Bridges) {
  EXPECT_EQ(bridges(path_graph(5)).size(), 4u);
  EXPECT_TRUE(bridges(cycle_graph(6)).empty());
  Graph c4p(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {2, 4}});
  EXPECT_EQ(bridges(c4p), (std::vector<Edge>{{2, 4}}));
  // An edge is a bridge iff deleting it adds a component.
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    Graph g = random_graph(2 + i % 9, 0.3, rng);
    std::vector<Edge> expect;
    for (auto e : g.edges()) {
      std::vector<Edge> one{e};
      if (oracle::components(remove_edges(g, one)) > oracle::components(g)) expect.push_back(e);
    }
    EXPECT_EQ(bridges(g), expect);
  }
}

TEST(Graph, CutGraph) {
  auto b = cut_graph(cycle_graph(6), Cut{VertexSet(6, {0, 1, 2})});
  EXPECT_EQ(b.crossing_edges, (std::vector<Edge>{{0, 5}, {2, 3}}));
  EXPECT_TRUE(cut_graph(cycle_graph(6), Cut{VertexSet(6)}).crossing_edges.empty());
  EXPECT_EQ(cut_graph(complete_graph(4), Cut{VertexSet(4, {1, 3})}).crossing_edges.size(), 4u);
  EXPECT_TRUE(b.has_edge(2, 3));
  EXPECT_FALSE(b.has_edge(3, 2));
  EXPECT_TRUE(b.swapped().has_edge(3, 2));
  EXPECT_EQ(b.complement().crossing_edges.size(), 9u - 2u);
}

TEST(Graph, DistanceNeighborhood) {
  EXPECT_EQ(distance_neighborhood(path_graph(5), VertexSet(5, {2}), 1).size(), 3u);
  EXPECT_EQ(distance_neighborhood(path_graph(5), VertexSet(5, {2}), 1, Neighborhood::Open).size(), 2u);
  VertexSet s(6, {1, 4});
  EXPECT_EQ(distance_neighborhood(cycle_graph(6), s, 0), s);
  EXPECT_EQ(distance_neighborhood(cycle_graph(6), VertexSet(6, {0}), 3).size(), 6u);
}

TEST(Graph, ForestAndConnectivity) {
  EXPECT_TRUE(is_forest(path_graph(4)));
  EXPECT_FALSE(is_forest(cycle_graph(3)));
  EXPECT_TRUE(is_forest(Graph(3)));
  EXPECT_TRUE(is_connected(Graph(1)));
  EXPECT_FALSE(is_connected(Graph(2)));
}

TEST(Treewidth, Examples) {
  Rng rng(5);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(exact_treewidth(random_tree(2 + i, rng)), 1u);
  EXPECT_EQ(exact_treewidth(complete_graph(4)), 3u);
  EXPECT_EQ(exact_treewidth(cycle_graph(5)), 2u);
  EXPECT_EQ(exact_treewidth(Graph(3)), 0u);
  EXPECT_THROW(exact_treewidth(Graph(16)), LimitExceeded);
}

TEST(Treewidth, MatchesEliminationOrderOracle) {
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& g : graph_classes(n)) EXPECT_EQ(exact_treewidth(g), oracle::treewidth(g)) << write_graph(g);
}

TEST(Generators, ClassCounts) {
  // Unlabelled graphs and connected graphs on n vertices.
  const std::size_t all[] = {1, 1, 2, 4, 11, 34, 156};
  const std::size_t conn[] = {1, 1, 1, 2, 6, 21, 112, 853};
  for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(graph_classes(n).size(), all[n]);
  for (std::size_t n = 1; n <= 7; ++n) EXPECT_EQ(connected_graph_classes(n).size(), conn[n]);
  // Trees with maximum degree 3, indexed by node count.
  const std::size_t sub[] = {0, 1, 1, 1, 2, 2, 4, 6, 11, 18, 37, 66};
  for (std::size_t n = 1; n <= 11; ++n) EXPECT_EQ(subcubic_tree_shapes(n).size(), sub[n]) << n;
}

TEST(Generators, Shapes) {
  EXPECT_EQ(star_graph(3).max_degree(), 3u);
  Graph sp = spider_graph({2, 2, 1});
  EXPECT_EQ(sp.order(), 6u);
  EXPECT_EQ(sp.degree(0), 3u);
  Graph br = broom_graph(3, 4);
  EXPECT_EQ(br.order(), 7u);
  EXPECT_TRUE(is_forest(br));
  Graph th = theta_graph(2, 3, 4);
  EXPECT_EQ(th.order(), 11u);
  EXPECT_EQ(th.size(), 12u);
  EXPECT_EQ(th.degree(0), 3u);
  EXPECT_EQ(th.degree(1), 3u);
  Rng rng(9);
  for (int i = 0; i < 30; ++i) {
    EXPECT_TRUE(is_forest(random_tree(1 + i, rng)));
    EXPECT_TRUE(is_connected(random_tree(1 + i, rng)));
    EXPECT_FALSE(is_connected(random_disconnected(8, rng)));
    Graph cp = cycle_with_pendants(9, 3, rng);
    EXPECT_EQ(cp.order(), 12u);
    EXPECT_EQ(cp.size(), 12u);
  }
}

TEST(Canon, AgreesWithPermutationSearch) {
  Rng rng(21);
  for (int i = 0; i < 300; ++i) {
    std::size_t n = 1 + i % 7;
    Graph a = random_graph(n, 0.45, rng);
    // Half the time, b is a relabelled copy of a.
    Graph b = random_graph(n, 0.45, rng);
    if (i % 2) {
      std::vector<Vertex> p(n);
      std::iota(p.begin(), p.end(), 0);
      std::shuffle(p.begin(), p.end(), rng);
      std::vector<Edge> es;
      for (auto [u, v] : a.edges()) es.emplace_back(p[u], p[v]);
      b = Graph(n, es);
    }
    EXPECT_EQ(isomorphic(a, b), oracle::isomorphic(a, b)) << write_graph(a) << write_graph(b);
  }
}

TEST(Canon, ClassesArePairwiseDistinct) {
  auto cls = graph_classes(5);
  for (std::size_t i = 0; i < cls.size(); ++i)
    for (std::size_t j = i + 1; j < cls.size(); ++j) EXPECT_FALSE(oracle::isomorphic(cls[i], cls[j]));
}

TEST(Canon, ColoursRestrictMaps) {
  Graph p3 = path_graph(3);
  std::vector<std::uint64_t> end_red{1, 0, 0}, other_end_red{0, 0, 1}, mid_red{0, 1, 0};
  EXPECT_EQ(canonical_form(p3, end_red).code, canonical_form(p3, other_end_red).code);
  EXPECT_NE(canonical_form(p3, end_red).code, canonical_form(p3, mid_red).code);
}
