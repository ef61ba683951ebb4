#include "zonocube/colors.hpp"

#include <algorithm>
#include <ostream>

#include "zonocube/error.hpp"

namespace zonocube {

namespace {

ColorSet::Mask bit(int c) {
  if (c < 1 || c > ColorSet::kMaxColor) {
    throw InvalidArgument("color " + std::to_string(c) + " outside 1.." + std::to_string(ColorSet::kMaxColor));
  }
  return ColorSet::Mask{1} << c;
}

ColorSet::Mask above_mask(int c) {
  if (c >= ColorSet::kMaxColor) return 0;
  if (c < 0) return ~ColorSet::Mask{1};
  return ~((ColorSet::Mask{2} << c) - 1);
}

}  // namespace

ColorSet::ColorSet(std::initializer_list<int> colors) {
  for (int c : colors) mask_ |= bit(c);
}

ColorSet ColorSet::from_sequence(const std::vector<int>& colors) {
  ColorSet s;
  int prev = 0;
  for (int c : colors) {
    if (c <= prev) throw InvalidArgument("color sequence must be strictly increasing positive integers");
    s.mask_ |= bit(c);
    prev = c;
  }
  return s;
}

ColorSet ColorSet::from_unordered(const std::vector<int>& colors) {
  ColorSet s;
  for (int c : colors) {
    Mask b = bit(c);
    if (s.mask_ & b) throw InvalidArgument("duplicate color " + std::to_string(c));
    s.mask_ |= b;
  }
  return s;
}

ColorSet ColorSet::interval(int lo, int hi) {
  ColorSet s;
  for (int c = std::max(lo, 1); c <= hi; ++c) s.mask_ |= bit(c);
  return s;
}

int ColorSet::min() const {
  if (empty()) throw InvalidArgument("min of empty color set");
  return std::countr_zero(mask_);
}

int ColorSet::max() const {
  if (empty()) throw InvalidArgument("max of empty color set");
  return 63 - std::countl_zero(mask_);
}

int ColorSet::count_above(int c) const { return std::popcount(mask_ & above_mask(c)); }

int ColorSet::count_below(int c) const {
  if (c <= 1) return 0;
  if (c > kMaxColor) return size();
  return std::popcount(mask_ & ((Mask{1} << c) - 1));
}

std::vector<int> ColorSet::elements() const { return {begin(), end()}; }

ColorSet ColorSet::with(int c) const { return from_mask(mask_ | bit(c)); }

ColorSet ColorSet::without(int c) const { return from_mask(mask_ & ~bit(c)); }

bool operator<(ColorSet a, ColorSet b) {
  ColorSet::Mask diff = a.mask_ ^ b.mask_;
  if (diff == 0) return false;
  int c = std::countr_zero(diff);
  if ((a.mask_ >> c) & 1U) return (b.mask_ & above_mask(c)) != 0;
  return (a.mask_ & above_mask(c)) == 0;
}

std::strong_ordering operator<=>(ColorSet a, ColorSet b) {
  if (a == b) return std::strong_ordering::equal;
  return a < b ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string ColorSet::label() const {
  if (empty()) return "0";
  std::string out;
  bool compact = max() < 10;
  for (int c : *this) {
    if (!compact && !out.empty()) out += ',';
    out += std::to_string(c);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, ColorSet s) { return os << s.label(); }

Parity parity(int i, ColorSet J) {
  if (J.contains(i)) throw InvalidArgument("parity(" + std::to_string(i) + ", J) requires the color outside J");
  return J.count_above(i) % 2 == 0 ? Parity::even : Parity::odd;
}

std::vector<ColorSet> grassmannian(ColorSet colors, int k) {
  std::vector<ColorSet> out;
  std::vector<int> elems = colors.elements();
  int n = static_cast<int>(elems.size());
  if (k < 0 || k > n) return out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    ColorSet s;
    for (int i : idx) s = s.with(elems[i]);
    out.push_back(s);
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == n - k + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int j = pos + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

std::vector<ColorSet> subsets_upto(ColorSet colors, int k) {
  std::vector<ColorSet> out;
  for (int j = 0; j <= std::min(k, colors.size()); ++j) {
    auto layer = grassmannian(colors, j);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ColorSet> all_subsets(ColorSet colors) { return subsets_upto(colors, colors.size()); }

std::vector<ColorSet> packet(ColorSet K) {
  std::vector<ColorSet> out;
  std::vector<int> elems = K.elements();
  for (auto it = elems.rbegin(); it != elems.rend(); ++it) out.push_back(K.without(*it));
  return out;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

std::uint64_t binomial_upto(int n, int k) {
  std::uint64_t total = 0;
  for (int j = 0; j <= k; ++j) total += binomial(n, j);
  return total;
}

int separation_blocks(ColorSet X, ColorSet Y) {
  int blocks = 0;
  int last = -1;
  for (int c : (X ^ Y)) {
    int side = X.contains(c) ? 0 : 1;
    if (side != last) ++blocks;
    last = side;
  }
  return blocks;
}

bool is_r_separated(ColorSet X, ColorSet Y, int r) {
  if (r < 0) throw InvalidArgument("separation order must be non-negative");
  return separation_blocks(X, Y) <= r + 1;
}

bool is_weakly_k_separated(ColorSet X, ColorSet Y, int k) {
  if (k < 1 || k % 2 == 0) throw InvalidArgument("weak separation is defined for odd k only");
  int m = separation_blocks(X, Y);
  if (m <= k + 1) return true;
  if (m > k + 2) return false;
  ColorSet diff = X ^ Y;
  bool x_surrounds = X.contains(diff.min());
  ColorSet outer = x_surrounds ? X : Y;
  ColorSet inner = x_surrounds ? Y : X;
  return outer.size() <= inner.size();
}

int interval_rank(ColorSet X) {
  int runs = 0;
  for (int c : X) {
    if (!X.contains(c - 1)) ++runs;
  }
  return runs;
}

bool is_peripheral(ColorSet X, int n, int d) {
  return interval_rank(X) + interval_rank(ColorSet::upto(n) - X) <= d;
}

std::vector<ColorSet> peripheral_sets(int n, int d) {
  std::vector<ColorSet> out;
  for (ColorSet X : all_subsets(ColorSet::upto(n))) {
    if (is_peripheral(X, n, d)) out.push_back(X);
  }
  return out;
}

}  // namespace zonocube
