#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fbranch/graph.hpp"

namespace fbranch {

// The six obstruction families. Values double as tie-break order.
enum class Family : std::uint8_t { Empty, Match, Chain, ChainStrict, AntiMatch, Complete };
inline constexpr std::array<Family, 6> kAllFamilies = {Family::Empty,       Family::Match,     Family::Chain,
                                                       Family::ChainStrict, Family::AntiMatch, Family::Complete};

std::string_view family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);

// Adjacency of a_i b_j in H^n_f: on the diagonal, above it (i < j), below it (i > j).
struct PatternShape {
  bool diagonal;
  bool forward;
  bool backward;
};
constexpr PatternShape pattern_shape(Family f) {
  switch (f) {
    case Family::Empty: return {false, false, false};
    case Family::Match: return {true, false, false};
    case Family::Chain: return {true, true, false};
    case Family::ChainStrict: return {false, true, false};
    case Family::AntiMatch: return {false, true, true};
    case Family::Complete: return {true, true, true};
  }
  return {false, false, false};
}
constexpr bool pattern_edge(Family f, std::size_t i, std::size_t j) {
  auto s = pattern_shape(f);
  return i == j ? s.diagonal : (i < j ? s.forward : s.backward);
}

// H^n_f as a graph: a_i = i, b_i = n + i.
Graph pattern_graph(Family f, std::size_t n);

class FamilySelector {
 public:
  FamilySelector() = default;
  static FamilySelector of(std::initializer_list<Family> fs);
  static FamilySelector from_bits(std::uint8_t bits);
  static FamilySelector primal() { return of({Family::Match, Family::Chain, Family::AntiMatch}); }
  static FamilySelector all() { return from_bits(0x3f); }
  static FamilySelector ntc();
  // "match,chain", "primal", "all", "ntc".
  static FamilySelector parse(std::string_view text);

  bool contains(Family f) const { return bits_ >> unsigned(f) & 1; }
  bool is_ntc() const { return ntc_; }
  bool empty() const { return !ntc_ && bits_ == 0; }
  std::uint8_t bits() const { return bits_; }
  std::vector<Family> families() const;
  FamilySelector with(Family f) const;
  FamilySelector without(Family f) const;
  bool is_subset_of(const FamilySelector& o) const { return !ntc_ && !o.ntc_ && (bits_ & ~o.bits_) == 0; }
  // Non-empty subset of {match, chain, antimatch}.
  bool is_primal_union() const;
  // Families whose width on a disjoint union is the maximum over components.
  bool component_safe() const;
  std::string to_string() const;
  friend bool operator==(const FamilySelector&, const FamilySelector&) = default;

 private:
  std::uint8_t bits_ = 0;
  bool ntc_ = false;
};

// The seven non-empty subsets of the primal families.
std::vector<FamilySelector> primal_unions();

struct PatternWitness {
  std::optional<Family> family;
  std::vector<Edge> pairs;  // (a_i, b_i) as original vertex ids, pattern order
};

struct CutValue {
  std::size_t value = 0;
  PatternWitness witness;
};

CutValue mim_value(const BipartiteCutGraph& b);
CutValue antimatch_value(const BipartiteCutGraph& b);
CutValue chain_value(const BipartiteCutGraph& b);
CutValue strictchain_value(const BipartiteCutGraph& b);
CutValue complete_value(const BipartiteCutGraph& b);
CutValue empty_value(const BipartiteCutGraph& b);
CutValue pattern_value(const BipartiteCutGraph& b, Family f);

CutValue family_cut_value(const Graph& g, const Cut& c, const FamilySelector& sel);

// Twin classes of X under N(v) \ X.
std::size_t ntc_value(const Graph& g, const VertexSet& x);

inline constexpr std::size_t kGenericPatternLimit = 24;
// Exhaustive reference evaluator over all ordered partner selections.
std::size_t generic_pattern_value(const BipartiteCutGraph& b, Family f, std::size_t limit = kGenericPatternLimit);

// Do the listed pairs induce exactly H^n_f inside G[X, Y]?
bool witness_valid(const Graph& g, const Cut& c, const PatternWitness& w);

// Mask-based evaluator for graphs with at most 64 vertices.
class CutEvaluator {
 public:
  CutEvaluator(const Graph& g, FamilySelector sel);
  std::size_t value(std::uint64_t x_mask) const;
  CutValue evaluate(std::uint64_t x_mask) const;
  std::size_t order() const { return adj_.size(); }
  const FamilySelector& selector() const { return sel_; }

 private:
  std::vector<std::uint64_t> adj_;
  FamilySelector sel_;
};

}  // namespace fbranch
