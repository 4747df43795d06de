#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "fbranch/cutfn.hpp"

namespace fbranch {

// Pairs (a_i, b_i), i in [0, q); an edge (i, j) means a_i b_j.
struct OrderedBipartiteGraph {
  std::size_t q = 0;
  std::vector<Vertex> a_side, b_side;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // sorted, unique

  static OrderedBipartiteGraph from_edges(std::size_t q, std::vector<std::pair<std::size_t, std::size_t>> edges);
  static OrderedBipartiteGraph pattern(Family f, std::size_t q);
  // The pattern spanned by a witness, read off the graph it came from.
  static OrderedBipartiteGraph from_witness(const Graph& g, const PatternWitness& w);

  bool has(std::size_t i, std::size_t j) const;
  // Pairs listed in `order` become pairs 0, 1, ...
  OrderedBipartiteGraph restrict_to(const std::vector<std::size_t>& order) const;
};

OrderedBipartiteGraph parse_ordered_bipartite(std::string_view text);
std::string write_ordered_bipartite(const OrderedBipartiteGraph& h);

struct Classification {
  std::vector<Family> tags;         // empty: no family matches
  std::vector<std::size_t> order;   // pair order under which the tags match
  bool reversed = false;            // order is the reversal of the input order
  bool matches() const { return !tags.empty(); }
  Family tag() const { return tags.front(); }
};

Classification classify_si(const OrderedBipartiteGraph& h);

// 1: both a_i b_j and a_j b_i; 2: only a_i b_j; 3: only a_j b_i; 4: neither. Needs i < j.
int pair_color(const OrderedBipartiteGraph& h, std::size_t i, std::size_t j);

struct HomogeneousSubset {
  std::vector<std::size_t> pairs;  // ascending
  std::vector<std::size_t> order;  // the same pairs in the order that realises `tag`
  Family tag;
  bool reversed = false;
};

std::optional<HomogeneousSubset> find_homogeneous_subset(const OrderedBipartiteGraph& h, std::size_t n);

mpz_class ramsey_upper_bound(const std::vector<mpz_class>& sizes);

}  // namespace fbranch
