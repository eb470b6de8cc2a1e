#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <stdexcept>
#include <vector>

namespace domir {

using Vertex = int;

/// Dense bit-indexed subset of the universe {0, ..., universe()-1}.
///
/// Binary set operations require both operands to share the same universe.
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr int kWordBits = 64;

  VertexSet() = default;
  explicit VertexSet(int universe)
      : universe_(universe), words_((static_cast<std::size_t>(universe) + kWordBits - 1) / kWordBits, 0) {
    if (universe < 0) throw std::invalid_argument("VertexSet: negative universe");
  }
  VertexSet(int universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
    for (Vertex v : members) insert(v);
  }

  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~Word{0};
    s.trim();
    return s;
  }

  int universe() const { return universe_; }

  bool contains(Vertex v) const {
    return v >= 0 && v < universe_ && ((words_[word(v)] >> bit(v)) & 1U) != 0;
  }
  void insert(Vertex v) {
    check(v);
    words_[word(v)] |= Word{1} << bit(v);
  }
  void erase(Vertex v) {
    check(v);
    words_[word(v)] &= ~(Word{1} << bit(v));
  }

  int count() const {
    int c = 0;
    for (Word w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (Word w : words_)
      if (w != 0) return false;
    return true;
  }
  void clear() {
    for (auto& w : words_) w = 0;
  }

  /// Lowest member, or -1 when empty.
  Vertex first() const { return next(0); }
  /// Lowest member >= from, or -1.
  Vertex next(Vertex from) const {
    if (from < 0) from = 0;
    if (from >= universe_) return -1;
    std::size_t wi = word(from);
    Word w = words_[wi] & (~Word{0} << bit(from));
    while (true) {
      if (w != 0) return static_cast<Vertex>(wi * kWordBits + std::countr_zero(w));
      if (++wi == words_.size()) return -1;
      w = words_[wi];
    }
  }

  bool intersects(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & o.words_[i]) != 0) return true;
    return false;
  }
  int intersection_count(const VertexSet& o) const {
    int c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & o.words_[i]);
    return c;
  }
  bool is_subset_of(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~o.words_[i]) != 0) return false;
    return true;
  }

  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  /// Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  VertexSet complement() const {
    VertexSet c(universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) c.words_[i] = ~words_[i];
    c.trim();
    return c;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  class Iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    Iterator() = default;
    Iterator(const VertexSet* s, Vertex v) : set_(s), v_(v) {}
    Vertex operator*() const { return v_; }
    Iterator& operator++() {
      v_ = set_->next(v_ + 1);
      return *this;
    }
    Iterator operator++(int) {
      Iterator t = *this;
      ++*this;
      return t;
    }
    friend bool operator==(const Iterator& a, const Iterator& b) { return a.v_ == b.v_; }

   private:
    const VertexSet* set_ = nullptr;
    Vertex v_ = -1;
  };

  Iterator begin() const { return {this, first()}; }
  Iterator end() const { return {this, -1}; }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

  /// Members are the set bits of `mask`; requires universe <= 64.
  static VertexSet from_mask(int universe, std::uint64_t mask) {
    VertexSet s(universe);
    if (universe > 0) {
      s.words_[0] = mask;
      s.trim();
    }
    return s;
  }

 private:
  static std::size_t word(Vertex v) { return static_cast<std::size_t>(v) / kWordBits; }
  static int bit(Vertex v) { return v % kWordBits; }
  void check(Vertex v) const {
    if (v < 0 || v >= universe_) throw std::out_of_range("VertexSet: vertex out of range");
  }
  void trim() {
    if (universe_ % kWordBits != 0 && !words_.empty())
      words_.back() &= (Word{1} << (universe_ % kWordBits)) - 1;
  }

  int universe_ = 0;
  std::vector<Word> words_;
};

}  // namespace domir
