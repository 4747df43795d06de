#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fbranch/cutfn.hpp"
#include "fbranch/graph.hpp"

namespace fbranch {

using NodeId = std::uint32_t;
using TreeEdge = std::pair<NodeId, NodeId>;

struct Tree {
  std::size_t node_count = 0;
  std::vector<TreeEdge> edges;

  // Per node: (neighbour, edge index), in edge order.
  std::vector<std::vector<std::pair<NodeId, std::size_t>>> adjacency() const;
  std::vector<std::size_t> degrees() const;
  bool is_tree() const;
};

struct BranchDecomposition {
  Tree tree;
  std::vector<std::pair<NodeId, Vertex>> leaves;  // sorted by node

  std::optional<Vertex> vertex_at(NodeId node) const;
  std::optional<NodeId> node_of(Vertex v) const;
  std::size_t vertex_universe() const;
};

struct EdgeValue {
  std::size_t edge;
  Cut cut;
  CutValue value;
};

struct WidthReport {
  std::vector<EdgeValue> per_edge;
  std::size_t width = 0;
  std::optional<std::size_t> argmax;  // first edge attaining the width
};

struct Solution {
  std::size_t width = 0;
  BranchDecomposition decomposition;
};

void validate_decomposition(const BranchDecomposition& bd, const Graph& g);
Cut edge_cut(const BranchDecomposition& bd, std::size_t edge);
// Side masks for every edge, same convention as edge_cut.
std::vector<Cut> edge_cuts(const BranchDecomposition& bd);
WidthReport decomposition_width(const BranchDecomposition& bd, const Graph& g, const FamilySelector& sel);

inline constexpr std::size_t kEnumerationLimit = 9;
inline constexpr std::size_t kDpLimit = 15;

// All (2n-5)!! leaf-labelled subcubic trees; leaf node i carries vertex i.
void for_each_decomposition(std::size_t n, const std::function<void(const BranchDecomposition&)>& visit,
                            std::size_t limit = kEnumerationLimit);
std::vector<BranchDecomposition> enumerate_decompositions(std::size_t n, std::size_t limit = kEnumerationLimit);

Solution exact_branchwidth_enum(const Graph& g, const FamilySelector& sel, std::size_t limit = kEnumerationLimit);
Solution exact_branchwidth_dp(const Graph& g, const FamilySelector& sel, std::size_t limit = kDpLimit,
                              std::size_t threads = 0);
Solution greedy_branchwidth(const Graph& g, const FamilySelector& sel, std::uint64_t seed = 0);

// Exact width of a forest under a primal-family union, without search.
std::size_t forest_width(const Graph& forest, const FamilySelector& sel);

struct RestrictedTree {
  Tree tree;
  std::vector<NodeId> original;                 // new node -> old node
  std::vector<std::vector<std::size_t>> paths;  // new edge -> old edges along it
};
RestrictedTree restrict_tree(const Tree& t, std::span<const NodeId> keep);

// Edge splitting the weight into [W/3, 2W/3]. Requires W > 0, zero weight on
// degree-3 nodes, at most W/3 on degree-2 nodes and at most 2W/3 on leaves.
std::size_t find_balanced_edge(const Tree& t, std::span<const double> weights);

BranchDecomposition join_components(const BranchDecomposition& a, const BranchDecomposition& b);
// Rewrites leaf vertices through `to_original` (local -> global id).
BranchDecomposition relabel_vertices(const BranchDecomposition& bd, std::span<const Vertex> to_original);

BranchDecomposition parse_decomposition(std::string_view text);
std::string write_decomposition(const BranchDecomposition& bd);
std::string decomposition_to_json(const BranchDecomposition& bd);

}  // namespace fbranch
