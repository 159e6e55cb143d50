#pragma once

#include "stbcsm/constellation.hpp"
#include "stbcsm/link.hpp"
#include "stbcsm/rng.hpp"

namespace stbcsm {

/// One spatial-modulation channel use: log2(n_t) index bits pick the
/// active antenna, the remaining log2(M) bits pick the symbol.
struct SmFrame {
  Bits bits;
  int antenna = 0;
  int symbol_label = 0;
  cd symbol;
  CVector x;
};

struct SmDecision {
  int antenna = 0;
  int symbol_label = 0;
  cd symbol;
  Bits bits;
};

struct SmTransmission {
  CVector y;
  CMatrix h_eff;  // n_r x n_t, exactly what the transmitter used
};

int sm_bits_per_use(int n_t, const Constellation& c);

SmFrame sm_map(BitSpan bits, int n_t, const Constellation& c);

/// Exhaustive ML over index_count antennas and all M symbols. Ties resolve
/// to the lowest (antenna, label).
SmDecision sm_ml_detect(const CVector& y, const CMatrix& h_eff, const Constellation& c, int index_count);

/// Effective n_r x n_t channel for a link variant. Precoded variants use
/// the first n_t columns of H_a * (beta * P), where H_a is the channel after
/// the analog stage and P is built from H_a with noise variance n0.
CMatrix sm_effective_channel(const CMatrix& h, const LinkSpec& link, double n0);

SmTransmission sm_transmit_receive(const SmFrame& frame, const CMatrix& h, const LinkSpec& link, double n0, Rng& rng);

}  // namespace stbcsm
