#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace tropmat {

// Subsets of {1,...,n} as machine-word bit patterns: element i <-> bit (i-1).
// All family enumerations iterate in increasing numeric (colex) order.
using Mask = std::uint64_t;

inline constexpr Mask bit(int element) { return Mask{1} << (element - 1); }

inline constexpr bool contains(Mask s, int element) { return (s >> (element - 1)) & 1; }

inline constexpr int card(Mask s) { return std::popcount(s); }

inline constexpr Mask full_mask(int n) { return n == 0 ? 0 : (~Mask{0} >> (64 - n)); }

inline std::vector<int> elements_of(Mask s) {
  std::vector<int> out;
  while (s) {
    const int b = std::countr_zero(s);
    out.push_back(b + 1);
    s &= s - 1;
  }
  return out;
}

inline Mask mask_of(const std::vector<int>& elements) {
  Mask m = 0;
  for (int e : elements) m |= bit(e);
  return m;
}

// Gosper's hack: next mask with the same popcount, or 0 when exhausted.
inline Mask next_same_card(Mask v, int n) {
  if (v == 0) return 0;
  const Mask c = v & (~v + 1);
  const Mask r = v + c;
  Mask next = (((r ^ v) >> 2) / c) | r;
  return next <= full_mask(n) ? next : 0;
}

inline Mask first_of_card(int k) { return k == 0 ? 0 : full_mask(k); }

// Calls fn(s) for every subset s of `space`, increasing numeric order.
template <typename Fn>
void for_each_subset(Mask space, Fn&& fn) {
  Mask s = 0;
  while (true) {
    fn(s);
    if (s == space) break;
    s = (s - space) & space;
  }
}

// Calls fn(s) for every k-subset of {1..n}, colex order.
template <typename Fn>
void for_each_k_subset(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    fn(Mask{0});
    return;
  }
  for (Mask s = first_of_card(k); s != 0; s = next_same_card(s, n)) fn(s);
}

// Compaction between {1..n} and a kept coordinate subset (orig labels -> 1..n').
// `kept` is the mask of surviving original elements.
inline Mask compact_mask(Mask s, Mask kept) {
  Mask out = 0;
  int j = 0;
  while (kept) {
    const int b = std::countr_zero(kept);
    if ((s >> b) & 1) out |= Mask{1} << j;
    ++j;
    kept &= kept - 1;
  }
  return out;
}

inline Mask expand_mask(Mask s, Mask kept) {
  Mask out = 0;
  int j = 0;
  while (kept) {
    const int b = std::countr_zero(kept);
    if ((s >> j) & 1) out |= Mask{1} << b;
    ++j;
    kept &= kept - 1;
  }
  return out;
}

inline constexpr std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace tropmat
