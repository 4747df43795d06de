#include "fbranch/canon.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <sstream>

namespace fbranch {
namespace {

using Cells = std::vector<std::vector<Vertex>>;

class Canonizer {
 public:
  Canonizer(const Graph& g, std::span<const std::uint64_t> colors) : g_(g), colors_(g.order(), 0) {
    std::copy(colors.begin(), colors.end(), colors_.begin());
  }

  CanonicalForm run() {
    std::map<std::uint64_t, std::vector<Vertex>> by_color;
    for (Vertex v = 0; v < g_.order(); ++v) by_color[colors_[v]].push_back(v);
    Cells cells;
    for (auto& [c, vs] : by_color) cells.push_back(std::move(vs));
    search(refine(std::move(cells)));
    CanonicalForm out;
    out.order = best_order_;
    std::ostringstream os;
    os << g_.order() << ':';
    for (auto w : best_code_) os << std::hex << w << '.';
    out.code = os.str();
    return out;
  }

 private:
  // Split cells by neighbour counts into every cell until stable.
  Cells refine(Cells cells) const {
    const std::size_t n = g_.order();
    std::vector<std::size_t> cell_of(n);
    for (;;) {
      for (std::size_t i = 0; i < cells.size(); ++i)
        for (Vertex v : cells[i]) cell_of[v] = i;
      Cells next;
      bool changed = false;
      for (const auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::map<std::vector<std::uint32_t>, std::vector<Vertex>> split;
        for (Vertex v : cell) {
          std::vector<std::uint32_t> key(cells.size(), 0);
          for (Vertex w : g_.neighbors(v)) ++key[cell_of[w]];
          split[key].push_back(v);
        }
        if (split.size() > 1) changed = true;
        for (auto& [k, vs] : split) next.push_back(std::move(vs));
      }
      cells = std::move(next);
      if (!changed) return cells;
    }
  }

  void search(const Cells& cells) {
    auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
    if (target == cells.end()) {
      leaf(cells);
      return;
    }
    const auto idx = std::size_t(target - cells.begin());
    std::vector<Vertex> tried;
    for (Vertex v : *target) {
      // Swapping twins is an automorphism fixing everything else.
      bool twin = std::any_of(tried.begin(), tried.end(), [&](Vertex u) { return are_twins(u, v); });
      if (twin) continue;
      tried.push_back(v);
      Cells split;
      split.reserve(cells.size() + 1);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i != idx) {
          split.push_back(cells[i]);
          continue;
        }
        split.push_back({v});
        std::vector<Vertex> rest;
        for (Vertex w : cells[i])
          if (w != v) rest.push_back(w);
        split.push_back(std::move(rest));
      }
      search(refine(std::move(split)));
    }
  }

  bool are_twins(Vertex u, Vertex v) const {
    VertexSet a = g_.neighbor_set(u), b = g_.neighbor_set(v);
    a.erase(v);
    b.erase(u);
    return a == b;
  }

  void leaf(const Cells& cells) {
    const std::size_t n = g_.order();
    std::vector<Vertex> order;
    order.reserve(n);
    for (const auto& c : cells) order.push_back(c.front());
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;
    std::vector<std::uint64_t> code;
    code.reserve(n + n * n / 64 + 1);
    for (Vertex v : order) code.push_back(colors_[v]);
    std::uint64_t word = 0;
    int bits = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        word = word << 1 | (g_.adjacent(order[i], order[j]) ? 1 : 0);
        if (++bits == 64) {
          code.push_back(word);
          word = 0;
          bits = 0;
        }
      }
    if (bits) code.push_back(word << (64 - bits));
    if (best_order_.empty() || code < best_code_) {
      best_code_ = std::move(code);
      best_order_ = std::move(order);
    }
  }

  const Graph& g_;
  std::vector<std::uint64_t> colors_;
  std::vector<std::uint64_t> best_code_;
  std::vector<Vertex> best_order_;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g, std::span<const std::uint64_t> colors) {
  if (!colors.empty() && colors.size() != g.order()) throw std::invalid_argument("one colour per vertex required");
  if (g.order() == 0) return {{}, "0:"};
  return Canonizer(g, colors).run();
}

bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.size() == b.size() && canonical_form(a).code == canonical_form(b).code;
}

}  // namespace fbranch
