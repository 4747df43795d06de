#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fbranch/graph.hpp"

namespace fbranch {

// Path whose vertices all have degree two in the host graph.
struct UnimportantPath {
  std::vector<Vertex> vertices;
  std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
};

std::vector<Edge> feedback_edge_set(const Graph& g);

struct BridgeReduction {
  Graph graph;
  std::vector<Edge> bridges;            // input ids
  std::vector<Vertex> isolated;         // input ids, removed after the bridges
  std::vector<Vertex> to_original;      // output id -> input id
};
BridgeReduction reduce_bridges_isolated(const Graph& g);

std::optional<UnimportantPath> find_unimportant_path(const Graph& g, std::size_t min_len);
bool is_unimportant_path(const Graph& g, const UnimportantPath& p);

inline constexpr std::size_t kContractMinLength = 8;

// Merges v into u (u, v adjacent); vertices above v shift down by one.
Graph contract_edge(const Graph& g, Vertex u, Vertex v);
// The edge contracted on `p`, in g's numbering.
Edge contraction_edge(const UnimportantPath& p);
Graph contract_path_edge(const Graph& g, const UnimportantPath& p, std::size_t min_len = kContractMinLength);

struct KernelStep {
  enum class Kind { RemoveBridges, RemoveIsolated, Contract };
  Kind kind;
  std::vector<Edge> edges;       // bridges, or the single contracted edge (u, v)
  std::vector<Vertex> vertices;  // isolated vertices
};

struct KernelTrace {
  Graph input;
  Graph final_graph;
  std::size_t k = 0;
  bool forest = false;          // k = 0: nothing to do, width is known directly
  bool size_bound_met = true;   // |V| <= 18k - 8 at the end
  std::vector<KernelStep> steps;
};

KernelTrace kernelize_fes(const Graph& g);
Graph replay(const Graph& input, const std::vector<KernelStep>& steps);
std::string trace_to_json(const KernelTrace& t);

inline std::size_t kernel_vertex_bound(std::size_t k) { return k == 0 ? 0 : 18 * k - 8; }
inline std::size_t kernel_edge_bound(std::size_t k) { return k == 0 ? 0 : 18 * k - 9 + k; }

}  // namespace fbranch
