#include "fbranch/classify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "fbranch/errors.hpp"

namespace fbranch {

OrderedBipartiteGraph OrderedBipartiteGraph::from_edges(std::size_t q,
                                                        std::vector<std::pair<std::size_t, std::size_t>> edges) {
  OrderedBipartiteGraph h;
  h.q = q;
  for (std::size_t i = 0; i < q; ++i) {
    h.a_side.push_back(Vertex(i));
    h.b_side.push_back(Vertex(q + i));
  }
  for (auto [i, j] : edges)
    if (i >= q || j >= q) throw Error("pair index out of range");
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  h.edges = std::move(edges);
  return h;
}

OrderedBipartiteGraph OrderedBipartiteGraph::pattern(Family f, std::size_t q) {
  std::vector<std::pair<std::size_t, std::size_t>> es;
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j)
      if (pattern_edge(f, i, j)) es.emplace_back(i, j);
  return from_edges(q, std::move(es));
}

OrderedBipartiteGraph OrderedBipartiteGraph::from_witness(const Graph& g, const PatternWitness& w) {
  std::vector<std::pair<std::size_t, std::size_t>> es;
  const std::size_t q = w.pairs.size();
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j)
      if (g.adjacent(w.pairs[i].first, w.pairs[j].second)) es.emplace_back(i, j);
  auto h = from_edges(q, std::move(es));
  for (std::size_t i = 0; i < q; ++i) {
    h.a_side[i] = w.pairs[i].first;
    h.b_side[i] = w.pairs[i].second;
  }
  return h;
}

bool OrderedBipartiteGraph::has(std::size_t i, std::size_t j) const {
  return std::binary_search(edges.begin(), edges.end(), std::pair{i, j});
}

OrderedBipartiteGraph OrderedBipartiteGraph::restrict_to(const std::vector<std::size_t>& order) const {
  std::vector<std::pair<std::size_t, std::size_t>> es;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = 0; j < order.size(); ++j)
      if (has(order[i], order[j])) es.emplace_back(i, j);
  auto h = from_edges(order.size(), std::move(es));
  for (std::size_t i = 0; i < order.size(); ++i) {
    h.a_side[i] = a_side[order[i]];
    h.b_side[i] = b_side[order[i]];
  }
  return h;
}

OrderedBipartiteGraph parse_ordered_bipartite(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  long long q = -1;
  std::vector<std::pair<std::size_t, std::size_t>> es;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    auto num = [&](const std::string& s) {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(s, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != s.size()) throw ParseError(ParseErrorKind::Malformed, lineno, "not an integer: '" + s + "'");
      return v;
    };
    if (q < 0) {
      if (tok.size() != 1) throw ParseError(ParseErrorKind::Malformed, lineno, "first line must be 'q'");
      q = num(tok[0]);
      if (q < 1) throw ParseError(ParseErrorKind::OutOfRange, lineno, "q must be at least 1");
      continue;
    }
    if (tok.size() != 2) throw ParseError(ParseErrorKind::Malformed, lineno, "edge line must be 'i j'");
    long long i = num(tok[0]), j = num(tok[1]);
    if (i < 1 || j < 1 || i > q || j > q) throw ParseError(ParseErrorKind::OutOfRange, lineno, "pair index out of range");
    es.emplace_back(std::size_t(i - 1), std::size_t(j - 1));
  }
  if (q < 0) throw ParseError(ParseErrorKind::Malformed, lineno + 1, "missing 'q' line");
  return OrderedBipartiteGraph::from_edges(std::size_t(q), std::move(es));
}

std::string write_ordered_bipartite(const OrderedBipartiteGraph& h) {
  std::ostringstream os;
  os << h.q << '\n';
  for (auto [i, j] : h.edges) os << i + 1 << ' ' << j + 1 << '\n';
  return os.str();
}

namespace {

bool matches_exactly(const OrderedBipartiteGraph& h, Family f) {
  for (std::size_t i = 0; i < h.q; ++i)
    for (std::size_t j = 0; j < h.q; ++j)
      if (h.has(i, j) != pattern_edge(f, i, j)) return false;
  return true;
}

std::vector<Family> exact_tags(const OrderedBipartiteGraph& h) {
  std::vector<Family> tags;
  for (Family f : kAllFamilies)
    if (matches_exactly(h, f)) tags.push_back(f);
  return tags;
}

}  // namespace

Classification classify_si(const OrderedBipartiteGraph& h) {
  Classification c;
  c.order.resize(h.q);
  std::iota(c.order.begin(), c.order.end(), 0);
  c.tags = exact_tags(h);
  if (c.matches() || h.q < 2) return c;
  // Only the chain patterns depend on pair order; there a_i's degree fixes its slot.
  std::vector<std::size_t> deg(h.q, 0);
  for (auto [i, j] : h.edges) ++deg[i];
  std::vector<std::size_t> order(h.q);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return deg[x] > deg[y]; });
  auto tags = exact_tags(h.restrict_to(order));
  if (tags.empty()) return c;
  c.tags = std::move(tags);
  c.reversed = std::is_sorted(order.begin(), order.end(), std::greater<>());
  c.order = std::move(order);
  return c;
}

int pair_color(const OrderedBipartiteGraph& h, std::size_t i, std::size_t j) {
  if (!(i < j) || j >= h.q) throw Error("pair_color needs i < j < q");
  const bool ij = h.has(i, j), ji = h.has(j, i);
  if (ij && ji) return 1;
  if (ij) return 2;
  if (ji) return 3;
  return 4;
}

namespace {

// The tag forced by a uniform colour and partner status, and whether the order flips.
std::pair<Family, bool> predicted_tag(int color, bool matched) {
  switch (color) {
    case 1: return {matched ? Family::Complete : Family::AntiMatch, false};
    case 2: return {matched ? Family::Chain : Family::ChainStrict, false};
    case 3: return {matched ? Family::Chain : Family::ChainStrict, true};
    default: return {matched ? Family::Match : Family::Empty, false};
  }
}

}  // namespace

std::optional<HomogeneousSubset> find_homogeneous_subset(const OrderedBipartiteGraph& h, std::size_t n) {
  if (n == 0) return HomogeneousSubset{{}, {}, Family::Empty, false};
  if (n > h.q) return std::nullopt;
  if (n == 1) {
    auto c = classify_si(h.restrict_to({0}));
    return HomogeneousSubset{{0}, {0}, c.tag(), false};
  }
  // Monochromatic cliques in the pair colouring, one colour/partner class at a time,
  // visited in the order of the tag they produce.
  std::vector<std::pair<int, bool>> classes;
  for (Family f : kAllFamilies)
    for (int color = 1; color <= 4; ++color)
      for (bool matched : {false, true})
        if (predicted_tag(color, matched).first == f) classes.emplace_back(color, matched);
  std::vector<std::size_t> cur;
  for (auto [color, matched] : classes) {
    std::function<bool(std::size_t)> grow = [&](std::size_t from) {
      if (cur.size() == n) return true;
      for (std::size_t p = from; p + (n - cur.size()) <= h.q; ++p) {
        if (h.has(p, p) != matched) continue;
        bool ok = true;
        for (std::size_t i : cur)
          if (pair_color(h, i, p) != color) {
            ok = false;
            break;
          }
        if (!ok) continue;
        cur.push_back(p);
        if (grow(p + 1)) return true;
        cur.pop_back();
      }
      return false;
    };
    cur.clear();
    if (grow(0)) {
      auto [tag, reversed] = predicted_tag(color, matched);
      auto order = cur;
      if (reversed) std::reverse(order.begin(), order.end());
      return HomogeneousSubset{cur, order, tag, reversed};
    }
  }
  // A chain can also hide behind a pair order that is neither ascending nor
  // descending; fall back to classifying every n-subset.
  std::vector<std::size_t> pick(n);
  std::iota(pick.begin(), pick.end(), 0);
  for (;;) {
    auto c = classify_si(h.restrict_to(pick));
    if (c.matches()) {
      std::vector<std::size_t> order;
      for (std::size_t i : c.order) order.push_back(pick[i]);
      return HomogeneousSubset{pick, order, c.tag(), c.reversed};
    }
    std::size_t i = n;
    while (i > 0 && pick[i - 1] == h.q - n + i - 1) --i;
    if (i == 0) return std::nullopt;
    ++pick[i - 1];
    for (std::size_t j = i; j < n; ++j) pick[j] = pick[j - 1] + 1;
  }
}

mpz_class ramsey_upper_bound(const std::vector<mpz_class>& sizes) {
  if (sizes.empty()) throw Error("ramsey_upper_bound needs at least one colour");
  for (const auto& s : sizes)
    if (s < 1) throw Error("clique targets must be at least 1");
  auto two = [](const mpz_class& n1, const mpz_class& n2) {
    if (!n1.fits_ulong_p()) throw Error("first clique target too large");
    mpz_class top = n1 + n2 - 1, r;
    mpz_bin_ui(r.get_mpz_t(), top.get_mpz_t(), n1.get_ui() - 1);
    return r;
  };
  if (sizes.size() == 1) return sizes.front();
  std::vector<mpz_class> s = sizes;
  while (s.size() > 2) {
    mpz_class last = two(s[s.size() - 2], s.back());
    s.pop_back();
    s.back() = last;
  }
  return two(s[0], s[1]);
}

}  // namespace fbranch
