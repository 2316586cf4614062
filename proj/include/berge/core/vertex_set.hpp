#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <iterator>
#include <vector>

namespace berge {

/// Largest vertex count supported anywhere in the toolkit.
inline constexpr int kMaxVertices = 64;

/**
 * Set of vertex indices in [0, 64), stored as one machine word.
 *
 * Doubles as a subset of Z/nZ for the shift and SSC machinery, where the
 * modulus is carried separately.
 */
class VertexSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr VertexSet(std::initializer_list<int> vs) {
    for (int v : vs) insert(v);
  }

  static constexpr VertexSet from_bits(std::uint64_t bits) {
    VertexSet s;
    s.bits_ = bits;
    return s;
  }
  /// {lo, lo+1, ..., hi-1}
  static constexpr VertexSet interval(int lo, int hi) {
    if (hi <= lo) return {};
    return from_bits(low_mask(hi) & ~low_mask(lo));
  }
  /// {0, ..., n-1}
  static constexpr VertexSet universe(int n) { return from_bits(low_mask(n)); }
  static VertexSet from_vector(const std::vector<int>& vs);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int v) const { return v >= 0 && v < 64 && ((bits_ >> v) & 1U) != 0; }
  constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  /// Smallest element; undefined on the empty set.
  constexpr int min() const { return std::countr_zero(bits_); }
  constexpr int max() const { return 63 - std::countl_zero(bits_); }
  constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }
  std::vector<int> to_vector() const;

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return from_bits(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return from_bits(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return from_bits(a.bits_ & ~b.bits_); }
  friend constexpr VertexSet operator^(VertexSet a, VertexSet b) { return from_bits(a.bits_ ^ b.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

  constexpr bool operator==(const VertexSet&) const = default;
  /// Orders sets by their sorted element lists (lexicographic).
  friend bool lex_less(VertexSet a, VertexSet b);
  constexpr auto operator<=>(const VertexSet& o) const { return bits_ <=> o.bits_; }

 private:
  static constexpr std::uint64_t low_mask(int n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  }

  std::uint64_t bits_ = 0;
};

bool lex_less(VertexSet a, VertexSet b);

/// Residue arithmetic on Z/nZ.
constexpr int mod(long long a, int n) {
  long long m = a % n;
  return static_cast<int>(m < 0 ? m + n : m);
}

/// {(a + s) mod n : a in A}
constexpr VertexSet rotate(VertexSet a, int s, int n) {
  s = mod(s, n);
  if (s == 0) return a;
  const std::uint64_t mask = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  const std::uint64_t b = a.bits();
  return VertexSet::from_bits(((b << s) | (b >> (n - s))) & mask);
}

std::ostream& operator<<(std::ostream& os, VertexSet s);

}  // namespace berge
