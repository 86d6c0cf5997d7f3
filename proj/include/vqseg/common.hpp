#pragma once

#include <bit>
#include <cstdint>
#include <numbers>
#include <vector>

namespace vqseg {

/// Binary assignment vector; entry i is the partition label of variable i.
using BitVector = std::vector<std::uint8_t>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Smallest k with 2^k >= n (n >= 1). ceil_log2(1) == 0.
inline int ceil_log2(std::uint64_t n) {
  return static_cast<int>(std::bit_width(std::bit_ceil(n)) - 1);
}

inline BitVector complement(const BitVector& x) {
  BitVector y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] ? 0 : 1;
  return y;
}

/// Packs bits into an integer with bit 0 as the least significant bit.
inline std::uint64_t bits_to_index(const BitVector& x) {
  std::uint64_t k = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i]) k |= std::uint64_t{1} << i;
  return k;
}

inline BitVector index_to_bits(std::uint64_t k, int n) {
  BitVector x(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = (k >> i) & 1;
  return x;
}

}  // namespace vqseg
