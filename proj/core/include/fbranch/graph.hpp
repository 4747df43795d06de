#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fbranch/vertex_set.hpp"

namespace fbranch {

using Edge = std::pair<Vertex, Vertex>;

// Undirected simple graph, immutable once built. Neighbour lists are sorted.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);
  // Duplicate edges collapse; loops and out-of-range endpoints throw.
  Graph(std::size_t n, std::span<const Edge> edges);
  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t order() const noexcept { return adj_.size(); }
  std::size_t size() const noexcept { return m_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  const VertexSet& neighbor_set(Vertex v) const { return nbr_sets_[v]; }
  bool adjacent(Vertex u, Vertex v) const { return nbr_sets_[u].contains(v); }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  std::size_t max_degree() const noexcept;
  // Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;
  VertexSet all() const { return VertexSet::full(order()); }
  VertexSet empty_set() const { return VertexSet(order()); }
  // Neighbourhood as a bit mask, for n <= 64.
  std::uint64_t adjacency_mask(Vertex v) const { return nbr_sets_[v].mask(); }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  void set_labels(std::vector<std::string> labels);

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<VertexSet> nbr_sets_;
  std::vector<std::string> labels_;
  std::size_t m_ = 0;
};

struct Cut {
  VertexSet side_x;
  Cut complement() const { return Cut{side_x.complement()}; }
};

// G[X, Y]: only edges with exactly one endpoint in X.
struct BipartiteCutGraph {
  std::vector<Vertex> x_vertices;
  std::vector<Vertex> y_vertices;
  std::vector<Edge> crossing_edges;  // (x, y), sorted

  bool has_edge(Vertex x, Vertex y) const;
  BipartiteCutGraph swapped() const;
  // Complement within the cut: cross pairs become edges iff they were not.
  BipartiteCutGraph complement() const;
};

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_original;    // new index -> old vertex
  std::vector<std::int64_t> to_local;  // old vertex -> new index or -1
};

Graph parse_graph(std::string_view text);
std::string write_graph(const Graph& g);
std::string graph_to_json(const Graph& g);

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);
Graph remove_edges(const Graph& g, std::span<const Edge> edges);
Graph remove_vertices(const Graph& g, const VertexSet& s);
Graph disjoint_union(const Graph& a, const Graph& b);

std::vector<VertexSet> connected_components(const Graph& g);
std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& within);
bool is_connected(const Graph& g);
bool is_forest(const Graph& g);
std::vector<Edge> bridges(const Graph& g);

BipartiteCutGraph cut_graph(const Graph& g, const Cut& c);

enum class Neighborhood { Closed, Open };
VertexSet distance_neighborhood(const Graph& g, const VertexSet& s, std::size_t radius,
                                Neighborhood kind = Neighborhood::Closed);

inline constexpr std::size_t kTreewidthLimit = 15;
std::size_t exact_treewidth(const Graph& g, std::size_t limit = kTreewidthLimit);

}  // namespace fbranch
