#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "fbranch/graph.hpp"

namespace fbranch {

struct TreedepthDecomposition {
  std::vector<std::int64_t> parent;  // -1 for roots
  std::vector<Vertex> roots;
  std::vector<std::size_t> depth;    // roots have depth 1
  std::size_t height = 0;

  std::vector<std::vector<Vertex>> children() const;
  // Vertex set of the subtree under v, v included.
  VertexSet subtree(Vertex v) const;
  // v and all its ancestors.
  VertexSet root_path(Vertex v) const;
  // rank = height - depth + 1, so the deepest nodes have rank 1.
  std::size_t rank(Vertex v) const { return height - depth[v] + 1; }
};

inline constexpr std::size_t kTreedepthLimit = 20;
TreedepthDecomposition treedepth_decomposition(const Graph& g, std::size_t limit = kTreedepthLimit);
// Every edge joins an ancestor-descendant pair.
bool closure_contains(const TreedepthDecomposition& td, const Graph& g);

struct ComponentSignature {
  std::string code;                // canonical form of H with attachment colours
  std::vector<VertexSet> gamma;    // attachment sets in canonical vertex order
  friend bool operator==(const ComponentSignature& a, const ComponentSignature& b) { return a.code == b.code; }
};

ComponentSignature component_signature(const Graph& g, const VertexSet& r, const VertexSet& comp);

struct PruneRecord {
  Graph graph;
  std::vector<Vertex> to_original;             // output id -> input id
  std::vector<std::vector<Vertex>> removed;    // removed components, input ids
};

PruneRecord prune_duplicates(const Graph& g, const VertexSet& r, std::size_t threshold);

struct ThresholdPolicy {
  enum class Kind { Fixed, Surrogate, ExactBound };
  Kind kind = Kind::Surrogate;
  std::size_t fixed = 0;

  static ThresholdPolicy of(std::size_t m) { return {Kind::Fixed, m}; }
  static ThresholdPolicy surrogate() { return {Kind::Surrogate, 0}; }
  static ThresholdPolicy exact_bound() { return {Kind::ExactBound, 0}; }
  // Components kept per class, for treedepth t and component size p.
  mpz_class threshold(std::size_t t, std::size_t p) const;
};

PruneRecord prune_by_treedepth(const Graph& g, const ThresholdPolicy& policy);
inline PruneRecord prune_by_treedepth(const Graph& g, std::size_t threshold) {
  return prune_by_treedepth(g, ThresholdPolicy::of(threshold));
}

struct BoundG {
  mpz_class g4, g3, g2, g1, g;
};

// Evaluations growing past this many bits throw LimitExceeded.
inline constexpr std::size_t kBoundBitLimit = std::size_t{1} << 26;

mpz_class bound_f_star(const mpz_class& k, const mpz_class& p, const mpz_class& l);
mpz_class bound_f(const mpz_class& k, const mpz_class& p);
BoundG bound_g(const mpz_class& t, const mpz_class& p);
mpz_class bound_h(std::size_t k, std::size_t j);

}  // namespace fbranch
