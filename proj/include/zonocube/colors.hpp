#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace zonocube {

/// A finite set of positive integer colors, stored as a bitmask over 1..63.
///
/// Iteration always yields colors in increasing order, so the mask is the
/// canonical strictly increasing sequence. Ordering (`operator<`) is the
/// lexicographic order of those sequences.
class ColorSet {
 public:
  using Mask = std::uint64_t;
  static constexpr int kMaxColor = 63;

  class iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    explicit iterator(Mask rest) : rest_(rest) {}
    int operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const iterator&) const = default;

   private:
    Mask rest_ = 0;
  };

  constexpr ColorSet() = default;
  ColorSet(std::initializer_list<int> colors);

  /// Builds a set from a strictly increasing sequence of colors in 1..63.
  static ColorSet from_sequence(const std::vector<int>& colors);
  /// Builds a set from any collection of distinct colors in 1..63.
  static ColorSet from_unordered(const std::vector<int>& colors);
  static constexpr ColorSet from_mask(Mask m) {
    ColorSet s;
    s.mask_ = m & ~Mask{1};
    return s;
  }
  /// The interval {lo, ..., hi}; empty when hi < lo.
  static ColorSet interval(int lo, int hi);
  /// The set [n] = {1, ..., n}.
  static ColorSet upto(int n) { return interval(1, n); }

  constexpr Mask mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr int size() const { return std::popcount(mask_); }
  bool contains(int c) const { return c >= 1 && c <= kMaxColor && ((mask_ >> c) & 1U); }
  int min() const;
  int max() const;
  /// Number of elements strictly greater than c.
  int count_above(int c) const;
  /// Number of elements strictly smaller than c.
  int count_below(int c) const;
  std::vector<int> elements() const;

  iterator begin() const { return iterator(mask_); }
  iterator end() const { return iterator(0); }

  ColorSet with(int c) const;
  ColorSet without(int c) const;
  bool subset_of(ColorSet other) const { return (mask_ & ~other.mask_) == 0; }
  bool disjoint(ColorSet other) const { return (mask_ & other.mask_) == 0; }

  friend constexpr ColorSet operator|(ColorSet a, ColorSet b) { return from_mask(a.mask_ | b.mask_); }
  friend constexpr ColorSet operator&(ColorSet a, ColorSet b) { return from_mask(a.mask_ & b.mask_); }
  friend constexpr ColorSet operator-(ColorSet a, ColorSet b) { return from_mask(a.mask_ & ~b.mask_); }
  friend constexpr ColorSet operator^(ColorSet a, ColorSet b) { return from_mask(a.mask_ ^ b.mask_); }
  friend constexpr bool operator==(ColorSet a, ColorSet b) { return a.mask_ == b.mask_; }
  friend bool operator<(ColorSet a, ColorSet b);
  friend std::strong_ordering operator<=>(ColorSet a, ColorSet b);

  /// Compact label: digits concatenated when every color is below 10
  /// ("135"), otherwise comma separated ("1,10,12"). The empty set is "0".
  std::string label() const;

 private:
  Mask mask_ = 0;
};

std::ostream& operator<<(std::ostream& os, ColorSet s);

enum class Parity { even, odd };

/// Parity of color i with respect to J: even iff an even number of elements of J exceed i.
Parity parity(int i, ColorSet J);

/// All k-element subsets of `colors`, in lexicographic order.
std::vector<ColorSet> grassmannian(ColorSet colors, int k);
/// All subsets of `colors` with at most k elements, in lexicographic order.
std::vector<ColorSet> subsets_upto(ColorSet colors, int k);
/// All subsets of `colors`, in lexicographic order.
std::vector<ColorSet> all_subsets(ColorSet colors);

/// The d-subsets K - i of a (d+1)-set K, listed in lexicographic order.
std::vector<ColorSet> packet(ColorSet K);

std::uint64_t binomial(int n, int k);
/// Sum of binomial(n, j) for 0 <= j <= k.
std::uint64_t binomial_upto(int n, int k);

/// Number of maximal runs of equal origin in the sorted symmetric difference of X and Y.
int separation_blocks(ColorSet X, ColorSet Y);
/// X and Y are r-separated iff the symmetric difference splits into at most r + 1 blocks.
bool is_r_separated(ColorSet X, ColorSet Y, int r);
/// Weak k-separation for odd k; even k raises InvalidArgument.
bool is_weakly_k_separated(ColorSet X, ColorSet Y, int k);

/// Number of maximal runs of consecutive integers in X.
int interval_rank(ColorSet X);
/// X is peripheral for (n, d) when interval_rank(X) + interval_rank([n] - X) <= d.
bool is_peripheral(ColorSet X, int n, int d);

/// All 2^n subsets of [n] that are peripheral for (n, d).
std::vector<ColorSet> peripheral_sets(int n, int d);

struct ColorSetHash {
  std::size_t operator()(ColorSet s) const noexcept { return std::hash<ColorSet::Mask>{}(s.mask()); }
};

}  // namespace zonocube

template <>
struct std::hash<zonocube::ColorSet> : zonocube::ColorSetHash {};
