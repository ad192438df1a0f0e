#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace zonotile {

/// Subsets of [n] for n <= 30, as bitmasks. Bit i stands for the (i+1)-st
/// element; all public file formats and messages are 1-based, everything in
/// memory is 0-based.
using Mask = uint32_t;

constexpr int kMaxGroundSet = 30;

inline int popcount(Mask m) { return std::popcount(m); }

inline bool contains(Mask m, int i) { return (m >> i) & 1u; }

inline Mask full_mask(int n) { return n >= 32 ? ~0u : ((1u << n) - 1u); }

inline std::vector<int> mask_to_vec(Mask m) {
  std::vector<int> v;
  while (m) {
    int i = std::countr_zero(m);
    v.push_back(i);
    m &= m - 1;
  }
  return v;
}

inline Mask vec_to_mask(const std::vector<int>& v) {
  Mask m = 0;
  for (int i : v) m |= (Mask{1} << i);
  return m;
}

/// All size-k subsets of [n] in lexicographic order (as sorted index lists).
std::vector<Mask> subsets_of_size(int n, int k);

/// Iterates subsets of a given mask (Gosper-style submask walk), all sizes.
template <typename F>
inline void for_each_submask(Mask m, F&& f) {
  Mask s = m;
  for (;;) {
    f(s);
    if (s == 0) break;
    s = (s - 1) & m;
  }
}

std::string mask_to_string(Mask m);  // 1-based, e.g. "{1,3,4}"

}  // namespace zonotile
