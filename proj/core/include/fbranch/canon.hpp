#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fbranch/graph.hpp"

namespace fbranch {

struct CanonicalForm {
  std::vector<Vertex> order;  // canonical position -> vertex
  std::string code;           // equal iff colour-preserving isomorphic
};

// Individualisation-refinement canonical labelling. `colors` (optional, one per
// vertex) must itself be isomorphism-invariant; vertices only map to equal colours.
CanonicalForm canonical_form(const Graph& g, std::span<const std::uint64_t> colors = {});

bool isomorphic(const Graph& a, const Graph& b);

}  // namespace fbranch
