#pragma once

// Slow reference implementations. None of these call into the library's
// algorithms; they only read Graph adjacency.

#include <cstdint>
#include <vector>

#include "fbranch/cutfn.hpp"
#include "fbranch/decomp.hpp"
#include "fbranch/graph.hpp"
#include "fbranch/typseq.hpp"

namespace oracle {

using fbranch::Graph;

// Applies the repetition and typical operations until neither fires.
fbranch::NatSequence typical(fbranch::NatSequence s);

// Minimum over all elimination orderings of the largest elimination degree.
std::size_t treewidth(const Graph& g);

// Minimum height over all parent functions whose closure contains g.
std::size_t treedepth(const Graph& g);

// Largest n such that H^n_f sits side-respectingly in G[X, V \ X], found by
// enumerating every sequence of distinct cross pairs.
std::size_t pattern_value(const Graph& g, std::uint64_t x_mask, fbranch::Family f);

// Distinct sets N(v) \ X over v in X.
std::size_t twin_classes(const Graph& g, std::uint64_t x_mask);

bool isomorphic(const Graph& a, const Graph& b);

std::size_t components(const Graph& g);

// Weight on each side of every tree edge, first entry the side holding edges[e].first.
std::vector<std::pair<double, double>> edge_splits(const fbranch::Tree& t, const std::vector<double>& w);

}  // namespace oracle
