#pragma once

#include "stbcsm/constellation.hpp"
#include "stbcsm/rng.hpp"

namespace stbcsm {

/// All n_t antennas active, each stream scaled by 1/sqrt(n_t).
struct VblastFrame {
  Bits bits;
  std::vector<int> labels;
  CVector x;
};

/// Largest hypothesis count the joint ML detector accepts.
inline constexpr long long kMaxVblastHypotheses = 1LL << 20;

VblastFrame vblast_map(BitSpan bits, int n_t, const Constellation& c);

/// Joint ML over all M^n_t symbol vectors, lexicographically lowest label
/// vector on ties. Throws ConfigError when M^n_t exceeds 2^20.
Bits vblast_ml_detect(const CVector& y, const CMatrix& h, const Constellation& c, int n_t);

void check_vblast_size(int n_t, const Constellation& c);

}  // namespace stbcsm
