#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace fbranch {

using Vertex = std::uint32_t;

// Bitset over [0, universe). One inline word covers graphs up to 64 vertices.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}
  VertexSet(std::size_t universe, std::initializer_list<Vertex> vs) : VertexSet(universe) {
    for (Vertex v : vs) insert(v);
  }
  template <class Range>
  static VertexSet from_range(std::size_t universe, const Range& vs) {
    VertexSet s(universe);
    for (auto v : vs) s.insert(static_cast<Vertex>(v));
    return s;
  }
  static VertexSet from_mask(std::size_t universe, std::uint64_t mask);
  static VertexSet full(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }
  bool contains(Vertex v) const noexcept { return v < universe_ && (words_[v >> 6] >> (v & 63) & 1); }
  void insert(Vertex v);
  void erase(Vertex v) noexcept {
    if (v < universe_) words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }
  std::size_t size() const noexcept;
  bool empty() const noexcept;
  std::optional<Vertex> first() const noexcept;

  VertexSet complement() const;
  bool is_subset_of(const VertexSet& o) const;
  bool intersects(const VertexSet& o) const;

  VertexSet& operator|=(const VertexSet& o);
  VertexSet& operator&=(const VertexSet& o);
  VertexSet& operator-=(const VertexSet& o);
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

  // Only valid when universe <= 64.
  std::uint64_t mask() const;
  std::vector<Vertex> to_vector() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        f(static_cast<Vertex>(w * 64 + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

 private:
  void check_same(const VertexSet& o) const;

  std::size_t universe_ = 0;
  boost::container::small_vector<std::uint64_t, 1> words_;
};

}  // namespace fbranch
