#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace ucc {

/// Fixed-capacity bitset with a runtime width.
///
/// Storage is inline (no allocation), so values are cheap to copy and hash.
/// Binary operations expect operands of equal width. Ordering compares the
/// bit pattern as an unsigned integer (bit 0 least significant), which is the
/// canonical order used for every sorted output in the library.
class Bitset {
 public:
  static constexpr std::size_t kWordBits = 64;
  static constexpr std::size_t kWords = 4;
  static constexpr std::size_t kMaxBits = kWords * kWordBits;

  Bitset() = default;
  explicit Bitset(std::size_t width);

  static Bitset full(std::size_t width);
  static Bitset fromIndices(std::size_t width, const std::vector<std::size_t>& indices);

  std::size_t width() const { return width_; }

  bool test(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i) { words_[i / kWordBits] |= std::uint64_t{1} << (i % kWordBits); }
  void reset(std::size_t i) { words_[i / kWordBits] &= ~(std::uint64_t{1} << (i % kWordBits)); }

  std::size_t count() const {
    std::size_t n = 0;
    for (std::size_t w = 0; w < usedWords(); ++w) n += std::popcount(words_[w]);
    return n;
  }

  bool none() const {
    for (std::size_t w = 0; w < usedWords(); ++w)
      if (words_[w] != 0) return false;
    return true;
  }
  bool any() const { return !none(); }

  /// Lowest set index, or width() if empty.
  std::size_t first() const {
    for (std::size_t w = 0; w < usedWords(); ++w)
      if (words_[w] != 0) return w * kWordBits + std::countr_zero(words_[w]);
    return width_;
  }

  bool isSubsetOf(const Bitset& other) const {
    for (std::size_t w = 0; w < usedWords(); ++w)
      if (words_[w] & ~other.words_[w]) return false;
    return true;
  }

  bool intersects(const Bitset& other) const {
    for (std::size_t w = 0; w < usedWords(); ++w)
      if (words_[w] & other.words_[w]) return true;
    return false;
  }

  Bitset& operator|=(const Bitset& o) {
    for (std::size_t w = 0; w < usedWords(); ++w) words_[w] |= o.words_[w];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    for (std::size_t w = 0; w < usedWords(); ++w) words_[w] &= o.words_[w];
    return *this;
  }
  /// Set difference.
  Bitset& operator-=(const Bitset& o) {
    for (std::size_t w = 0; w < usedWords(); ++w) words_[w] &= ~o.words_[w];
    return *this;
  }

  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

  /// Complement within width().
  Bitset operator~() const { return full(width_) - *this; }

  template <class F>
  void forEach(F&& fn) const {
    for (std::size_t w = 0; w < usedWords(); ++w) {
      std::uint64_t word = words_[w];
      while (word != 0) {
        fn(w * kWordBits + static_cast<std::size_t>(std::countr_zero(word)));
        word &= word - 1;
      }
    }
  }

  std::vector<std::size_t> indices() const;

  /// Renders as "{0,3,5}".
  std::string toString() const;

  std::size_t hash() const;

  friend bool operator==(const Bitset& a, const Bitset& b) {
    return a.width_ == b.width_ && a.words_ == b.words_;
  }
  friend std::strong_ordering operator<=>(const Bitset& a, const Bitset& b) {
    if (auto c = a.width_ <=> b.width_; c != 0) return c;
    for (std::size_t w = kWords; w-- > 0;)
      if (auto c = a.words_[w] <=> b.words_[w]; c != 0) return c;
    return std::strong_ordering::equal;
  }

 private:
  std::size_t usedWords() const { return (width_ + kWordBits - 1) / kWordBits; }

  std::array<std::uint64_t, kWords> words_{};
  std::uint32_t width_ = 0;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace ucc
