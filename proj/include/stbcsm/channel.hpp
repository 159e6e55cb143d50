#pragma once

#include "stbcsm/rng.hpp"
#include "stbcsm/types.hpp"

namespace stbcsm {

/// Flat Rayleigh fading matrix, n_r x n_t. Column v holds the path gains from
/// transmit antenna v to every receive antenna.
struct ChannelRealization {
  CMatrix h;

  int n_r() const { return static_cast<int>(h.rows()); }
  int n_t() const { return static_cast<int>(h.cols()); }
};

/// Noise variance per complex dimension for a target average SNR per
/// receive antenna.
struct NoiseModel {
  double n0 = 1.0;
  double rho_db = 0.0;

  static NoiseModel from_snr_db(double rho_db, double signal_power = 1.0);
};

/// Entries i.i.d. CN(0, 1), drawn column by column.
ChannelRealization draw_channel(int n_r, int n_t, Rng& rng);

/// In-place variant used on the simulation hot path.
void draw_channel_into(CMatrix& h, Rng& rng);

double noise_variance_from_snr(double rho_db, double signal_power = 1.0);

/// i.i.d. CN(0, n0). n0 == 0 yields an exact zero vector.
CVector draw_noise(int dim, double n0, Rng& rng);

void add_noise(CVector& y, double n0, Rng& rng);

}  // namespace stbcsm
