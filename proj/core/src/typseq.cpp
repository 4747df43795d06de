#include "fbranch/typseq.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <set>
#include <tuple>

#include "fbranch/errors.hpp"

namespace fbranch {

Nat saturating_add(Nat a, Nat b) { return a > kBottom - b ? kBottom : a + b; }

NatSequence typical_of(const NatSequence& in) {
  if (in.empty()) throw Error("typical_of needs a non-empty sequence");
  NatSequence s;
  for (Nat x : in)
    if (s.empty() || s.back() != x) s.push_back(x);
  if (s.size() == 1) return s;
  const auto [lo_it, hi_it] = std::minmax_element(s.begin(), s.end());
  const Nat lo = *lo_it, hi = *hi_it;
  // Leftmost global extreme and rightmost occurrence of the other one: all between collapses.
  std::size_t left = 0;
  while (s[left] != lo && s[left] != hi) ++left;
  const Nat other = s[left] == lo ? hi : lo;
  std::size_t right = s.size() - 1;
  while (s[right] != other) --right;

  NatSequence prefix;
  for (std::size_t anchor = left; anchor > 0;) {
    // Next kept entry to the left: leftmost opposite extreme of s[0, anchor).
    const bool want_max = s[anchor] < s[anchor - 1];
    auto range_end = s.begin() + std::ptrdiff_t(anchor);
    Nat target = want_max ? *std::max_element(s.begin(), range_end) : *std::min_element(s.begin(), range_end);
    anchor = std::size_t(std::find(s.begin(), range_end, target) - s.begin());
    prefix.push_back(target);
  }
  NatSequence suffix;
  for (std::size_t anchor = right; anchor + 1 < s.size();) {
    const bool want_max = s[anchor] < s[anchor + 1];
    auto range_begin = s.begin() + std::ptrdiff_t(anchor + 1);
    Nat target = want_max ? *std::max_element(range_begin, s.end()) : *std::min_element(range_begin, s.end());
    anchor = s.size() - 1 - std::size_t(std::find(s.rbegin(), s.rend() - std::ptrdiff_t(anchor + 1), target) - s.rbegin());
    suffix.push_back(target);
  }
  NatSequence out(prefix.rbegin(), prefix.rend());
  out.push_back(s[left]);
  out.push_back(s[right]);
  out.insert(out.end(), suffix.begin(), suffix.end());
  return out;
}

bool is_typical(const NatSequence& s) { return !s.empty() && typical_of(s) == s; }

NatSequence shift(const NatSequence& s, Nat z) {
  NatSequence out;
  out.reserve(s.size());
  for (Nat x : s) out.push_back(saturating_add(x, z));
  return out;
}

NatSequence concat(const NatSequence& a, const NatSequence& b) {
  NatSequence out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::vector<NatSequence> enumerate_typical(std::size_t k, std::size_t limit) {
  if (k > limit) throw LimitExceeded("enumerate_typical", k, limit);
  // Typical sequences are closed under prefixes, so grow one entry at a time.
  // The cap sits one above the known length bound so a violation would surface.
  const std::size_t cap = 2 * k + 2;
  std::vector<NatSequence> out;
  NatSequence cur;
  std::function<void()> grow = [&] {
    if (cur.size() == cap) return;
    for (Nat x = 0; x <= k; ++x) {
      cur.push_back(x);
      if (is_typical(cur)) {
        out.push_back(cur);
        grow();
      }
      cur.pop_back();
    }
  };
  grow();
  std::sort(out.begin(), out.end(), [](const NatSequence& a, const NatSequence& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::vector<NatSequence> interleave(const NatSequence& s, const NatSequence& t, std::size_t cap) {
  if (!is_typical(s) || !is_typical(t)) throw Error("interleave needs typical sequences");
  if (cap == 0) cap = s.size() + t.size();
  // Walk the grid of (i, j) index pairs; each step appends s_i + t_j. Appending to a
  // typical prefix only needs that prefix: tau(u + v) = tau(tau(u) + v).
  std::set<NatSequence> results;
  std::set<std::tuple<std::size_t, std::size_t, std::size_t, NatSequence>> seen;
  std::function<void(std::size_t, std::size_t, std::size_t, const NatSequence&)> walk =
      [&](std::size_t i, std::size_t j, std::size_t len, const NatSequence& prefix) {
        if (len > cap || !seen.emplace(i, j, len, prefix).second) return;
        NatSequence next = prefix;
        next.push_back(saturating_add(s[i], t[j]));
        next = typical_of(next);
        if (i + 1 == s.size() && j + 1 == t.size()) results.insert(next);
        // Staying put repeats the last sum, which compression removes again.
        if (i + 1 < s.size()) walk(i + 1, j, len + 1, next);
        if (j + 1 < t.size()) walk(i, j + 1, len + 1, next);
        if (i + 1 < s.size() && j + 1 < t.size()) walk(i + 1, j + 1, len + 1, next);
      };
  walk(0, 0, 1, {});
  return {results.begin(), results.end()};
}

std::string format_sequence(const NatSequence& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += s[i] == kBottom ? "_|_" : std::to_string(s[i]);
  }
  return out;
}

NatSequence parse_sequence(std::string_view text) {
  NatSequence out;
  std::size_t field = 0;
  while (true) {
    ++field;
    auto comma = text.find(',');
    std::string_view tok = text.substr(0, comma);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.remove_prefix(1);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.remove_suffix(1);
    if (tok == "_|_") {
      out.push_back(kBottom);
    } else {
      Nat v = 0;
      auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (tok.empty() || ec != std::errc{} || p != tok.data() + tok.size() || v == kBottom)
        throw ParseError(ParseErrorKind::Malformed, field, "bad sequence entry '" + std::string(tok) + "'");
      out.push_back(v);
    }
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  return out;
}

}  // namespace fbranch
