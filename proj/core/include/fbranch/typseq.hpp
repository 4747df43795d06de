#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

namespace fbranch {

using Nat = std::uint64_t;
// Absorbing bottom element: compares above every natural, sums to itself.
inline constexpr Nat kBottom = std::numeric_limits<Nat>::max();
using NatSequence = std::vector<Nat>;

Nat saturating_add(Nat a, Nat b);

NatSequence typical_of(const NatSequence& s);
bool is_typical(const NatSequence& s);
NatSequence shift(const NatSequence& s, Nat z);
NatSequence concat(const NatSequence& a, const NatSequence& b);

inline constexpr std::size_t kTypicalEnumerationLimit = 6;
// Every typical sequence over {0..k}, sorted by (length, lexicographic).
std::vector<NatSequence> enumerate_typical(std::size_t k, std::size_t limit = kTypicalEnumerationLimit);

// s (+) t over extensions of length <= cap (0: |s| + |t|), sorted lexicographically.
std::vector<NatSequence> interleave(const NatSequence& s, const NatSequence& t, std::size_t cap = 0);

std::string format_sequence(const NatSequence& s);
NatSequence parse_sequence(std::string_view text);

}  // namespace fbranch
