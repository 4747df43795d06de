#include "fbranch/cutfn.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "fbranch/errors.hpp"

namespace fbranch {

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Empty: return "empty";
    case Family::Match: return "match";
    case Family::Chain: return "chain";
    case Family::ChainStrict: return "chainstrict";
    case Family::AntiMatch: return "antimatch";
    case Family::Complete: return "complete";
  }
  return "?";
}

std::optional<Family> family_from_name(std::string_view name) {
  for (Family f : kAllFamilies)
    if (family_name(f) == name) return f;
  return std::nullopt;
}

Graph pattern_graph(Family f, std::size_t n) {
  std::vector<Edge> es;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (pattern_edge(f, i, j)) es.emplace_back(Vertex(i), Vertex(n + j));
  return Graph(2 * n, es);
}

FamilySelector FamilySelector::of(std::initializer_list<Family> fs) {
  FamilySelector s;
  for (Family f : fs) s.bits_ |= std::uint8_t(1u << unsigned(f));
  return s;
}

FamilySelector FamilySelector::from_bits(std::uint8_t bits) {
  FamilySelector s;
  s.bits_ = bits & 0x3f;
  return s;
}

FamilySelector FamilySelector::ntc() {
  FamilySelector s;
  s.ntc_ = true;
  return s;
}

FamilySelector FamilySelector::parse(std::string_view text) {
  FamilySelector s;
  bool saw_ntc = false;
  std::size_t tokens = 0;
  while (true) {
    auto comma = text.find(',');
    std::string tok(text.substr(0, comma));
    tok.erase(std::remove_if(tok.begin(), tok.end(), [](unsigned char c) { return std::isspace(c); }), tok.end());
    std::transform(tok.begin(), tok.end(), tok.begin(), [](unsigned char c) { return char(std::tolower(c)); });
    if (!tok.empty()) {
      ++tokens;
      if (tok == "primal") {
        s.bits_ |= primal().bits_;
      } else if (tok == "all") {
        s.bits_ |= all().bits_;
      } else if (tok == "ntc") {
        saw_ntc = true;
      } else if (auto f = family_from_name(tok)) {
        s.bits_ |= std::uint8_t(1u << unsigned(*f));
      } else {
        throw Error("unknown family '" + tok + "'");
      }
    }
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  if (saw_ntc) {
    if (tokens != 1) throw Error("ntc cannot be combined with other families");
    return ntc();
  }
  if (s.empty()) throw Error("empty family selection");
  return s;
}

std::vector<Family> FamilySelector::families() const {
  std::vector<Family> out;
  for (Family f : kAllFamilies)
    if (contains(f)) out.push_back(f);
  return out;
}

FamilySelector FamilySelector::with(Family f) const { return from_bits(std::uint8_t(bits_ | 1u << unsigned(f))); }
FamilySelector FamilySelector::without(Family f) const { return from_bits(std::uint8_t(bits_ & ~(1u << unsigned(f)))); }

bool FamilySelector::is_primal_union() const { return !ntc_ && bits_ != 0 && is_subset_of(primal()); }

bool FamilySelector::component_safe() const {
  return !ntc_ && bits_ != 0 && !contains(Family::Empty) && !contains(Family::ChainStrict);
}

std::string FamilySelector::to_string() const {
  if (ntc_) return "ntc";
  std::string out;
  for (Family f : families()) {
    if (!out.empty()) out += ',';
    out += family_name(f);
  }
  return out;
}

std::vector<FamilySelector> primal_unions() {
  std::vector<FamilySelector> out;
  const Family prim[3] = {Family::Match, Family::Chain, Family::AntiMatch};
  for (unsigned m = 1; m < 8; ++m) {
    FamilySelector s;
    for (unsigned i = 0; i < 3; ++i)
      if (m >> i & 1) s = s.with(prim[i]);
    out.push_back(s);
  }
  return out;
}

namespace {

inline std::uint64_t bit(unsigned v) { return std::uint64_t{1} << v; }
inline std::uint64_t above(unsigned v) { return v >= 63 ? 0 : ~std::uint64_t{0} << (v + 1); }

// Depth-first growth of (a_1, b_1), ..., (a_n, b_n), a's from `xs`, b's from `ys`.
class PatternSearch {
 public:
  PatternSearch(const std::uint64_t* adj, Family f, std::size_t floor)
      : adj_(adj), shape_(pattern_shape(f)), best_(floor) {
    sym_a_ = shape_.forward == shape_.backward;
    sym_b_ = sym_a_ && shape_.diagonal == shape_.forward;
  }

  // Returns the best value found above `floor`; 0 pairs recorded if none beats it.
  std::size_t run(std::uint64_t xs, std::uint64_t ys) {
    dfs(xs, ys);
    return best_;
  }
  const std::vector<std::pair<unsigned, unsigned>>& best_pairs() const { return best_pairs_; }

 private:
  void dfs(std::uint64_t cand_a, std::uint64_t cand_b) {
    const std::size_t depth = cur_.size();
    if (depth > best_) {
      best_ = depth;
      best_pairs_ = cur_;
    }
    if (!cand_a || !cand_b) return;
    const std::size_t nb = std::size_t(std::popcount(cand_b));
    for (std::uint64_t ra = cand_a; ra; ra &= ra - 1) {
      const std::size_t left_a = sym_a_ ? std::size_t(std::popcount(ra)) : std::size_t(std::popcount(cand_a));
      if (depth + std::min(left_a, nb) <= best_) return;
      const unsigned a = unsigned(std::countr_zero(ra));
      const std::uint64_t row = adj_[a];
      const std::uint64_t base_a = sym_a_ ? cand_a & above(a) : cand_a & ~bit(a);
      for (std::uint64_t rb = cand_b; rb; rb &= rb - 1) {
        const unsigned b = unsigned(std::countr_zero(rb));
        if (bool(row >> b & 1) != shape_.diagonal) continue;
        const std::uint64_t next_a = base_a & (shape_.backward ? adj_[b] : ~adj_[b]);
        const std::uint64_t next_b = (sym_b_ ? cand_b & above(b) : cand_b & ~bit(b)) & (shape_.forward ? row : ~row);
        cur_.emplace_back(a, b);
        dfs(next_a, next_b);
        cur_.pop_back();
      }
    }
  }

  const std::uint64_t* adj_;
  PatternShape shape_;
  bool sym_a_ = false, sym_b_ = false;
  std::size_t best_;
  std::vector<std::pair<unsigned, unsigned>> cur_, best_pairs_;
};

// Compact a cut graph into <= 64 local vertices: x's first, then y's.
struct LocalCut {
  std::vector<Vertex> ids;
  std::vector<std::uint64_t> adj;
  std::uint64_t xs = 0, ys = 0;
};

LocalCut localize(const BipartiteCutGraph& b) {
  const std::size_t total = b.x_vertices.size() + b.y_vertices.size();
  if (total > 64) throw LimitExceeded("pattern search", total, 64);
  LocalCut l;
  l.ids = b.x_vertices;
  l.ids.insert(l.ids.end(), b.y_vertices.begin(), b.y_vertices.end());
  l.adj.assign(total, 0);
  const auto nx = b.x_vertices.size();
  auto local_y = [&](Vertex y) {
    auto it = std::find(b.y_vertices.begin(), b.y_vertices.end(), y);
    if (it == b.y_vertices.end()) throw std::invalid_argument("crossing edge endpoint not on y side");
    return unsigned(nx + std::size_t(it - b.y_vertices.begin()));
  };
  auto local_x = [&](Vertex x) {
    auto it = std::find(b.x_vertices.begin(), b.x_vertices.end(), x);
    if (it == b.x_vertices.end()) throw std::invalid_argument("crossing edge endpoint not on x side");
    return unsigned(it - b.x_vertices.begin());
  };
  for (auto [x, y] : b.crossing_edges) {
    unsigned i = local_x(x), j = local_y(y);
    l.adj[i] |= bit(j);
    l.adj[j] |= bit(i);
  }
  for (std::size_t i = 0; i < nx; ++i) l.xs |= bit(unsigned(i));
  for (std::size_t j = nx; j < total; ++j) l.ys |= bit(unsigned(j));
  return l;
}

CutValue search_local(const LocalCut& l, Family f) {
  PatternSearch s(l.adj.data(), f, 0);
  CutValue out;
  out.value = s.run(l.xs, l.ys);
  out.witness.family = f;
  for (auto [a, b] : s.best_pairs()) out.witness.pairs.emplace_back(l.ids[a], l.ids[b]);
  return out;
}

}  // namespace

CutValue pattern_value(const BipartiteCutGraph& b, Family f) { return search_local(localize(b), f); }

CutValue mim_value(const BipartiteCutGraph& b) { return pattern_value(b, Family::Match); }
CutValue chain_value(const BipartiteCutGraph& b) { return pattern_value(b, Family::Chain); }
CutValue strictchain_value(const BipartiteCutGraph& b) { return pattern_value(b, Family::ChainStrict); }
CutValue complete_value(const BipartiteCutGraph& b) { return pattern_value(b, Family::Complete); }

// The dual families are searched in the complement; the chosen vertex pairs carry over.
CutValue antimatch_value(const BipartiteCutGraph& b) {
  CutValue v = mim_value(b.complement());
  v.witness.family = Family::AntiMatch;
  return v;
}

CutValue empty_value(const BipartiteCutGraph& b) {
  CutValue v = complete_value(b.complement());
  v.witness.family = Family::Empty;
  return v;
}

std::size_t ntc_value(const Graph& g, const VertexSet& x) {
  const VertexSet outside = x.complement();
  std::set<std::vector<Vertex>> classes;
  x.for_each([&](Vertex v) { classes.insert((g.neighbor_set(v) & outside).to_vector()); });
  return classes.size();
}

CutValue family_cut_value(const Graph& g, const Cut& c, const FamilySelector& sel) {
  if (sel.empty()) throw Error("empty family selection");
  if (g.order() <= 64) return CutEvaluator(g, sel).evaluate(c.side_x.mask());
  if (sel.is_ntc()) return {std::max(ntc_value(g, c.side_x), ntc_value(g, c.side_x.complement())), {}};
  const auto b = cut_graph(g, c);
  CutValue best;
  best.witness.family = sel.families().front();
  for (Family f : sel.families()) {
    CutValue v = pattern_value(b, f);
    if (v.value > best.value) best = std::move(v);
  }
  return best;
}

CutEvaluator::CutEvaluator(const Graph& g, FamilySelector sel) : sel_(sel) {
  if (g.order() > 64) throw LimitExceeded("CutEvaluator", g.order(), 64);
  if (sel.empty()) throw Error("empty family selection");
  adj_.resize(g.order());
  for (Vertex v = 0; v < g.order(); ++v) adj_[v] = g.adjacency_mask(v);
}

namespace {

std::size_t ntc_mask(const std::vector<std::uint64_t>& adj, std::uint64_t x) {
  std::uint64_t keys[64];
  std::size_t k = 0;
  for (std::uint64_t r = x; r; r &= r - 1) keys[k++] = adj[std::countr_zero(r)] & ~x;
  std::sort(keys, keys + k);
  return std::size_t(std::unique(keys, keys + k) - keys);
}

}  // namespace

CutValue CutEvaluator::evaluate(std::uint64_t x) const {
  const std::size_t n = adj_.size();
  const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : bit(unsigned(n)) - 1;
  x &= full;
  const std::uint64_t y = full & ~x;
  CutValue out;
  if (sel_.is_ntc()) {
    out.value = x && y ? std::max(ntc_mask(adj_, x), ntc_mask(adj_, y)) : (x | y ? 1 : 0);
    return out;
  }
  auto fams = sel_.families();
  out.witness.family = fams.front();
  if (!x || !y) return out;
  const std::size_t cap = std::size_t(std::min(std::popcount(x), std::popcount(y)));
  for (Family f : fams) {
    if (out.value >= cap) break;
    PatternSearch s(adj_.data(), f, out.value);
    std::size_t v = s.run(x, y);
    if (v > out.value) {
      out.value = v;
      out.witness.family = f;
      out.witness.pairs.clear();
      for (auto [a, b] : s.best_pairs()) out.witness.pairs.emplace_back(Vertex(a), Vertex(b));
    }
  }
  return out;
}

std::size_t CutEvaluator::value(std::uint64_t x) const { return evaluate(x).value; }

namespace {

// Edge-set formulas written out per family, independent of PatternShape.
bool formula(Family f, std::size_t i, std::size_t j) {
  switch (f) {
    case Family::Empty: return false;
    case Family::Match: return i == j;
    case Family::Chain: return i <= j;
    case Family::ChainStrict: return i < j;
    case Family::AntiMatch: return i != j;
    case Family::Complete: return true;
  }
  return false;
}

struct Exhaustive {
  const std::vector<Vertex>& side_a;
  const std::vector<Vertex>& side_b;
  const BipartiteCutGraph& cut;
  bool a_is_x;
  Family f;
  std::vector<Vertex> as, bs;
  std::size_t best = 0;

  bool adjacent(Vertex a, Vertex b) const { return a_is_x ? cut.has_edge(a, b) : cut.has_edge(b, a); }

  void grow() {
    best = std::max(best, as.size());
    const std::size_t k = as.size();
    for (Vertex a : side_a) {
      if (std::find(as.begin(), as.end(), a) != as.end()) continue;
      for (Vertex b : side_b) {
        if (std::find(bs.begin(), bs.end(), b) != bs.end()) continue;
        bool ok = adjacent(a, b) == formula(f, k, k);
        for (std::size_t i = 0; ok && i < k; ++i)
          ok = adjacent(as[i], b) == formula(f, i, k) && adjacent(a, bs[i]) == formula(f, k, i);
        if (!ok) continue;
        as.push_back(a);
        bs.push_back(b);
        grow();
        as.pop_back();
        bs.pop_back();
      }
    }
  }
};

}  // namespace

std::size_t generic_pattern_value(const BipartiteCutGraph& b, Family f, std::size_t limit) {
  const std::size_t total = b.x_vertices.size() + b.y_vertices.size();
  if (total > limit) throw LimitExceeded("generic_pattern_value", total, limit);
  Exhaustive ab{b.x_vertices, b.y_vertices, b, true, f, {}, {}, 0};
  ab.grow();
  Exhaustive ba{b.y_vertices, b.x_vertices, b, false, f, {}, {}, 0};
  ba.grow();
  return std::max(ab.best, ba.best);
}

bool witness_valid(const Graph& g, const Cut& c, const PatternWitness& w) {
  if (w.pairs.empty()) return true;
  if (!w.family) return false;
  std::set<Vertex> used;
  const bool a_in_x = c.side_x.contains(w.pairs.front().first);
  for (auto [a, b] : w.pairs) {
    if (a >= g.order() || b >= g.order()) return false;
    if (c.side_x.contains(a) != a_in_x || c.side_x.contains(b) == a_in_x) return false;
    if (!used.insert(a).second || !used.insert(b).second) return false;
  }
  for (std::size_t i = 0; i < w.pairs.size(); ++i)
    for (std::size_t j = 0; j < w.pairs.size(); ++j)
      if (g.adjacent(w.pairs[i].first, w.pairs[j].second) != formula(*w.family, i, j)) return false;
  return true;
}

}  // namespace fbranch
