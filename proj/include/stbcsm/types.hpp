#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace stbcsm {

using cd = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

// One bit per element, values 0 or 1, MSB first wherever bits form an integer.
using Bits = std::vector<std::uint8_t>;
using BitSpan = std::span<const std::uint8_t>;

// Interprets bits as an unsigned integer, most significant bit first.
inline std::uint32_t bits_to_uint(BitSpan bits) {
  std::uint32_t v = 0;
  for (auto b : bits) v = (v << 1) | (b & 1u);
  return v;
}

inline void uint_to_bits(std::uint32_t value, int width, std::uint8_t* out) {
  for (int k = 0; k < width; ++k) out[k] = (value >> (width - 1 - k)) & 1u;
}

inline bool is_power_of_two(long long v) { return v > 0 && (v & (v - 1)) == 0; }

inline int ilog2(long long v) {
  int r = 0;
  while (v > 1) {
    v >>= 1;
    ++r;
  }
  return r;
}

}  // namespace stbcsm
