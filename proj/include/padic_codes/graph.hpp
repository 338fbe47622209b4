#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace padic_codes {

class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }

  void set(std::size_t i) { words_[i >> 6] |= bit(i); }
  void reset(std::size_t i) { words_[i >> 6] &= ~bit(i); }
  bool test(std::size_t i) const { return (words_[i >> 6] & bit(i)) != 0; }

  void set_all() {
    for (auto& w : words_) w = ~std::uint64_t{0};
    if (size_ % 64) words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
  }

  bool any() const {
    for (auto w : words_) {
      if (w) return true;
    }
    return false;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  Bitset& operator&=(const Bitset& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }

  /// this &= ~other
  Bitset& subtract(const Bitset& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
  }

  /// Clears all positions <= i.
  void clear_through(std::size_t i) {
    std::size_t w = i >> 6;
    for (std::size_t j = 0; j < w; ++j) words_[j] = 0;
    std::uint64_t keep = (i & 63) == 63 ? 0 : ~((bit(i) << 1) - 1);
    words_[w] &= keep;
  }

  /// Smallest set position >= from, or size() if none.
  std::size_t next(std::size_t from) const {
    if (from >= size_) return size_;
    std::size_t w = from >> 6;
    std::uint64_t word = words_[w] & ~(bit(from) - 1);
    for (;;) {
      if (word) return (w << 6) + static_cast<std::size_t>(std::countr_zero(word));
      if (++w == words_.size()) return size_;
      word = words_[w];
    }
  }

  std::size_t first() const { return next(0); }

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  static std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << (i & 63); }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Simple undirected graph with bitset adjacency rows.
class Graph {
 public:
  explicit Graph(std::size_t vertices) : adjacency_(vertices, Bitset(vertices)) {}

  std::size_t vertex_count() const { return adjacency_.size(); }

  void add_edge(std::size_t u, std::size_t v) {
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    adjacency_.at(u).set(v);
    adjacency_.at(v).set(u);
  }

  bool adjacent(std::size_t u, std::size_t v) const { return adjacency_[u].test(v); }
  const Bitset& neighbours(std::size_t v) const { return adjacency_[v]; }
  std::size_t degree(std::size_t v) const { return adjacency_[v].count(); }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (const auto& row : adjacency_) twice += row.count();
    return twice / 2;
  }

 private:
  std::vector<Bitset> adjacency_;
};

}  // namespace padic_codes
