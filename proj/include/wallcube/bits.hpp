#ifndef WALLCUBE_BITS_HPP
#define WALLCUBE_BITS_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace wallcube {

// One bit per point (point subsets) or per wall (orientations, wall sets).
using Mask = std::uint64_t;

inline constexpr int kMaxPoints = 64;
inline constexpr int kMaxWalls = 64;

constexpr Mask bit(int i) { return Mask{1} << i; }

constexpr Mask low_bits(int n) { return n >= 64 ? ~Mask{0} : (bit(n) - 1); }

constexpr bool test(Mask m, int i) { return (m >> i) & 1u; }

constexpr int popcount(Mask m) { return std::popcount(m); }

// Indices of set bits, ascending.
inline std::vector<int> bit_indices(Mask m) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(popcount(m)));
  while (m != 0) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

inline Mask mask_of(const std::vector<int>& indices) {
  Mask m = 0;
  for (int i : indices) m |= bit(i);
  return m;
}

// Bit i becomes character i; wall 0 comes first.
inline std::string to_bitstring(Mask m, int width) {
  std::string s(static_cast<std::size_t>(width), '0');
  for (int i = 0; i < width; ++i)
    if (test(m, i)) s[static_cast<std::size_t>(i)] = '1';
  return s;
}

}  // namespace wallcube

#endif  // WALLCUBE_BITS_HPP
