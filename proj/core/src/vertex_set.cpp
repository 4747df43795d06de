#include "fbranch/vertex_set.hpp"

#include <stdexcept>

namespace fbranch {

VertexSet VertexSet::from_mask(std::size_t universe, std::uint64_t mask) {
  if (universe > 64) throw std::invalid_argument("from_mask needs universe <= 64");
  VertexSet s(universe);
  if (universe < 64) mask &= (std::uint64_t{1} << universe) - 1;
  if (universe > 0) s.words_[0] = mask;
  return s;
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  if (universe % 64 != 0) s.words_.back() &= (std::uint64_t{1} << (universe % 64)) - 1;
  return s;
}

void VertexSet::insert(Vertex v) {
  if (v >= universe_) throw std::out_of_range("vertex outside set universe");
  words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

std::size_t VertexSet::size() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

bool VertexSet::empty() const noexcept {
  for (auto w : words_)
    if (w) return false;
  return true;
}

std::optional<Vertex> VertexSet::first() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w]) return static_cast<Vertex>(w * 64 + std::countr_zero(words_[w]));
  return std::nullopt;
}

VertexSet VertexSet::complement() const {
  VertexSet s = full(universe_);
  for (std::size_t w = 0; w < words_.size(); ++w) s.words_[w] &= ~words_[w];
  return s;
}

void VertexSet::check_same(const VertexSet& o) const {
  if (universe_ != o.universe_) throw std::invalid_argument("vertex sets over different universes");
}

bool VertexSet::is_subset_of(const VertexSet& o) const {
  check_same(o);
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] & ~o.words_[w]) return false;
  return true;
}

bool VertexSet::intersects(const VertexSet& o) const {
  check_same(o);
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] & o.words_[w]) return true;
  return false;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
  check_same(o);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
  check_same(o);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
  check_same(o);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~o.words_[w];
  return *this;
}

std::uint64_t VertexSet::mask() const {
  if (universe_ > 64) throw std::logic_error("mask() on a set wider than 64");
  return words_.empty() ? 0 : words_[0];
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

}  // namespace fbranch
