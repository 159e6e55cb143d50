#include "stbcsm/vblast.hpp"

#include <cmath>
#include <limits>

#include "stbcsm/error.hpp"

namespace stbcsm {

void check_vblast_size(int n_t, const Constellation& c) {
  if (static_cast<long long>(n_t) * c.bits_per_symbol() > 20) {
    throw ConfigError(ConfigError::Kind::Unsupported, "V-BLAST hypothesis space M^n_t exceeds 2^20");
  }
}

VblastFrame vblast_map(BitSpan bits, int n_t, const Constellation& c) {
  const int b = c.bits_per_symbol();
  if (static_cast<int>(bits.size()) != n_t * b) {
    throw LengthMismatchError("vblast_map: expected " + std::to_string(n_t * b) + " bits, got " +
                              std::to_string(bits.size()));
  }
  VblastFrame f;
  f.bits.assign(bits.begin(), bits.end());
  f.x.resize(n_t);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n_t));
  for (int k = 0; k < n_t; ++k) {
    const int label = static_cast<int>(bits_to_uint(bits.subspan(static_cast<std::size_t>(k * b), static_cast<std::size_t>(b))));
    f.labels.push_back(label);
    f.x(k) = scale * c.point(label);
  }
  return f;
}

Bits vblast_ml_detect(const CVector& y, const CMatrix& h, const Constellation& c, int n_t) {
  check_vblast_size(n_t, c);
  if (h.cols() != n_t || h.rows() != y.size()) throw DimensionMismatchError("vblast_ml_detect: dimension mismatch");
  const int b = c.bits_per_symbol();
  const int m = c.order();
  const double scale = 1.0 / std::sqrt(static_cast<double>(n_t));
  const long long total = 1LL << (n_t * b);

  // Scaled columns times every point, so a hypothesis is a sum of n_t columns.
  std::vector<CMatrix> contrib(static_cast<std::size_t>(n_t), CMatrix(h.rows(), m));
  for (int k = 0; k < n_t; ++k) {
    for (int s = 0; s < m; ++s) contrib[static_cast<std::size_t>(k)].col(s) = h.col(k) * (scale * c.point(s));
  }
  double best = std::numeric_limits<double>::infinity();
  long long best_index = 0;
  CVector r(y.size());
  for (long long idx = 0; idx < total; ++idx) {
    r = y;
    for (int k = 0; k < n_t; ++k) {
      const int label = static_cast<int>((idx >> ((n_t - 1 - k) * b)) & (m - 1));
      r -= contrib[static_cast<std::size_t>(k)].col(label);
    }
    const double metric = r.squaredNorm();
    if (metric < best) {
      best = metric;
      best_index = idx;
    }
  }
  Bits out(static_cast<std::size_t>(n_t * b));
  uint_to_bits(static_cast<std::uint32_t>(best_index), n_t * b, out.data());
  return out;
}

}  // namespace stbcsm
