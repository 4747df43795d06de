#include <gtest/gtest.h>

#include "../support/oracles.hpp"
#include "fbranch/canon.hpp"
#include "fbranch/cutfn.hpp"
#include "fbranch/errors.hpp"
#include "fbranch/generators.hpp"

using namespace fbranch;

namespace {

BipartiteCutGraph cut_of(const Graph& g, std::initializer_list<Vertex> x) {
  return cut_graph(g, Cut{VertexSet(g.order(), x)});
}

// H^n_f split along its own sides.
BipartiteCutGraph pattern_cut(Family f, std::size_t n) {
  Graph h = pattern_graph(f, n);
  VertexSet x(2 * n);
  for (Vertex i = 0; i < n; ++i) x.insert(i);
  return cut_graph(h, Cut{x});
}

const Graph k2 = complete_graph(2);

}  // namespace

TEST(Selector, Parse) {
  EXPECT_EQ(FamilySelector::parse("match,chain,antimatch"), FamilySelector::primal());
  EXPECT_EQ(FamilySelector::parse("primal"), FamilySelector::primal());
  EXPECT_EQ(FamilySelector::parse("all"), FamilySelector::all());
  EXPECT_TRUE(FamilySelector::parse("ntc").is_ntc());
  EXPECT_EQ(FamilySelector::parse(" Match , complete").families(), (std::vector<Family>{Family::Match, Family::Complete}));
  EXPECT_THROW(FamilySelector::parse(""), Error);
  EXPECT_THROW(FamilySelector::parse("ntc,match"), Error);
  EXPECT_THROW(FamilySelector::parse("matchy"), Error);
  EXPECT_EQ(FamilySelector::all().to_string(), "empty,match,chain,chainstrict,antimatch,complete");
  EXPECT_EQ(primal_unions().size(), 7u);
  for (const auto& s : primal_unions()) EXPECT_TRUE(s.is_primal_union());
  EXPECT_FALSE(FamilySelector::all().is_primal_union());
  for (Family f : kAllFamilies) EXPECT_EQ(family_from_name(family_name(f)), f);
}

TEST(Mim, Examples) {
  EXPECT_EQ(mim_value(cut_of(Graph(4), {0, 1})).value, 0u);
  auto c6 = mim_value(cut_of(cycle_graph(6), {0, 1, 2}));
  EXPECT_EQ(c6.value, 2u);
  EXPECT_EQ(c6.witness.pairs.size(), 2u);
  Graph k33 = complete_bipartite(3, 3);
  EXPECT_EQ(mim_value(cut_of(k33, {0, 1, 2})).value, 1u);
}

TEST(AntiMatch, Examples) {
  Graph k22 = complete_bipartite(2, 2);
  EXPECT_EQ(antimatch_value(cut_of(k22, {0, 1})).value, 0u);
  // P3 split at an end: the far end is the only non-neighbour.
  EXPECT_EQ(antimatch_value(cut_of(path_graph(3), {0})).value, 1u);
  EXPECT_EQ(antimatch_value(pattern_cut(Family::AntiMatch, 3)).value, 3u);
}

TEST(Chain, Examples) {
  EXPECT_EQ(chain_value(cut_of(k2, {0})).value, 1u);
  EXPECT_EQ(chain_value(pattern_cut(Family::Chain, 3)).value, 3u);
  EXPECT_EQ(chain_value(cut_of(complete_bipartite(2, 2), {0, 1})).value, 1u);
}

TEST(StrictChain, Examples) {
  EXPECT_EQ(strictchain_value(cut_of(Graph(2), {0})).value, 1u);
  EXPECT_EQ(strictchain_value(pattern_cut(Family::ChainStrict, 3)).value, 3u);
  for (std::size_t n = 1; n <= 5; ++n) EXPECT_GE(strictchain_value(pattern_cut(Family::Chain, n)).value, n - 1);
}

TEST(Complete, Examples) {
  EXPECT_EQ(complete_value(cut_of(complete_bipartite(3, 3), {0, 1, 2})).value, 3u);
  EXPECT_EQ(complete_value(cut_of(k2, {0})).value, 1u);
  EXPECT_EQ(complete_value(pattern_cut(Family::Match, 2)).value, 1u);
}

TEST(Empty, Examples) {
  EXPECT_EQ(empty_value(cut_of(Graph(4), {0, 1})).value, 2u);
  for (std::size_t n = 1; n <= 4; ++n) {
    Graph knn = complete_bipartite(n, n);
    VertexSet x(2 * n);
    for (Vertex i = 0; i < n; ++i) x.insert(i);
    EXPECT_EQ(empty_value(cut_graph(knn, Cut{x})).value, 0u);
  }
  EXPECT_EQ(empty_value(pattern_cut(Family::Match, 2)).value, 1u);
}

TEST(FamilyCutValue, Examples) {
  EXPECT_EQ(family_cut_value(cycle_graph(6), Cut{VertexSet(6, {0, 1, 2})}, FamilySelector::of({Family::Match})).value, 2u);
  Graph two_triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  auto v = family_cut_value(two_triangles, Cut{VertexSet(6, {0, 1, 2})}, FamilySelector::all());
  EXPECT_EQ(v.value, 3u);
  EXPECT_EQ(v.witness.family, Family::Empty);
  EXPECT_EQ(family_cut_value(k2, Cut{VertexSet(2, {0})}, FamilySelector::of({Family::Match, Family::Chain})).value, 1u);
  // Empty side: nothing fits.
  EXPECT_EQ(family_cut_value(k2, Cut{VertexSet(2)}, FamilySelector::all()).value, 0u);
}

TEST(Ntc, Examples) {
  Graph c6 = cycle_graph(6);
  EXPECT_EQ(ntc_value(c6, VertexSet(6, {2})), 1u);
  // 0 and 2 both see exactly {1} outside.
  EXPECT_EQ(ntc_value(path_graph(3), VertexSet(3, {0, 2})), 1u);
  EXPECT_EQ(ntc_value(complete_bipartite(3, 3), VertexSet(6, {0, 1, 2})), 1u);
  EXPECT_EQ(ntc_value(c6, VertexSet(6, {0, 1, 2})), 3u);
  // Per-edge value is the larger side.
  EXPECT_EQ(family_cut_value(star_graph(3), Cut{VertexSet(4, {0})}, FamilySelector::ntc()).value, 1u);
  EXPECT_EQ(family_cut_value(path_graph(4), Cut{VertexSet(4, {0})}, FamilySelector::ntc()).value, 2u);
}

TEST(Ntc, MatchesOracle) {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& g : graph_classes(n))
      for (std::uint64_t x = 0; x < (1u << n); ++x)
        EXPECT_EQ(ntc_value(g, VertexSet::from_mask(n, x)), oracle::twin_classes(g, x));
}

TEST(Generic, Examples) {
  EXPECT_EQ(generic_pattern_value(pattern_cut(Family::Chain, 3), Family::Chain), 3u);
  EXPECT_EQ(generic_pattern_value(cut_of(Graph(4), {0, 1}), Family::Match), 0u);
  EXPECT_THROW(generic_pattern_value(cut_of(Graph(30), {0}), Family::Match, 24), LimitExceeded);
}

// Every evaluator against the in-test enumeration, with witnesses re-checked.
TEST(Evaluators, MatchOracleOnAllSmallCuts) {
  for (std::size_t n = 2; n <= 5; ++n)
    for (const auto& g : graph_classes(n))
      for (std::uint64_t x = 1; x + 1 < (1u << n); ++x) {
        Cut c{VertexSet::from_mask(n, x)};
        auto b = cut_graph(g, c);
        for (Family f : kAllFamilies) {
          std::size_t want = oracle::pattern_value(g, x, f);
          CutValue got = pattern_value(b, f);
          ASSERT_EQ(got.value, want) << family_name(f) << " mask " << x << "\n" << write_graph(g);
          EXPECT_EQ(generic_pattern_value(b, f), want);
          EXPECT_EQ(CutEvaluator(g, FamilySelector::of({f})).value(x), want);
          if (want) {
            EXPECT_TRUE(witness_valid(g, c, got.witness));
            EXPECT_EQ(got.witness.pairs.size(), want);
          }
        }
      }
}

TEST(Evaluators, SelectorTakesMaximum) {
  Rng rng(4);
  for (int i = 0; i < 300; ++i) {
    std::size_t n = 2 + i % 7;
    Graph g = random_graph(n, 0.5, rng);
    std::uint64_t x = 1 + rng() % ((1u << n) - 2);
    auto sel = FamilySelector::from_bits(std::uint8_t(1 + rng() % 63));
    Cut c{VertexSet::from_mask(n, x)};
    std::size_t want = 0;
    for (Family f : sel.families()) want = std::max(want, oracle::pattern_value(g, x, f));
    auto got = family_cut_value(g, c, sel);
    EXPECT_EQ(got.value, want);
    if (want) {
      EXPECT_TRUE(witness_valid(g, c, got.witness));
    }
    // Symmetric in the two sides.
    EXPECT_EQ(family_cut_value(g, c.complement(), sel).value, want);
  }
}

TEST(Witness, RejectsWrongPairs) {
  Graph c6 = cycle_graph(6);
  Cut c{VertexSet(6, {0, 1, 2})};
  EXPECT_TRUE(witness_valid(c6, c, {Family::Match, {{2, 3}, {0, 5}}}));
  EXPECT_FALSE(witness_valid(c6, c, {Family::Match, {{2, 3}, {1, 5}}}));
  EXPECT_FALSE(witness_valid(c6, c, {Family::Match, {{2, 3}, {2, 3}}}));
  EXPECT_FALSE(witness_valid(c6, c, {Family::Chain, {{2, 3}, {0, 5}}}));
}

TEST(Patterns, PairwiseNonIsomorphicFromThreePairs) {
  for (std::size_t q = 3; q <= 5; ++q)
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = i + 1; j < 6; ++j)
        EXPECT_FALSE(isomorphic(pattern_graph(kAllFamilies[i], q), pattern_graph(kAllFamilies[j], q)))
            << family_name(kAllFamilies[i]) << " vs " << family_name(kAllFamilies[j]) << " at q=" << q;
}

TEST(Patterns, MatchAndAntiMatchCoincideAtTwoPairs) {
  // Both are 2K2 once the pair structure is forgotten.
  EXPECT_TRUE(isomorphic(pattern_graph(Family::Match, 2), pattern_graph(Family::AntiMatch, 2)));
  EXPECT_TRUE(oracle::isomorphic(pattern_graph(Family::Match, 2), pattern_graph(Family::AntiMatch, 2)));
}

TEST(Patterns, EdgeCounts) {
  const std::size_t q = 4;
  EXPECT_EQ(pattern_graph(Family::Empty, q).size(), 0u);
  EXPECT_EQ(pattern_graph(Family::Match, q).size(), q);
  EXPECT_EQ(pattern_graph(Family::Chain, q).size(), q * (q + 1) / 2);
  EXPECT_EQ(pattern_graph(Family::ChainStrict, q).size(), q * (q - 1) / 2);
  EXPECT_EQ(pattern_graph(Family::AntiMatch, q).size(), q * (q - 1));
  EXPECT_EQ(pattern_graph(Family::Complete, q).size(), q * q);
}
