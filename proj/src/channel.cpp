#include "stbcsm/channel.hpp"

#include <cmath>

#include "stbcsm/error.hpp"

namespace stbcsm {

NoiseModel NoiseModel::from_snr_db(double rho_db, double signal_power) {
  return {noise_variance_from_snr(rho_db, signal_power), rho_db};
}

ChannelRealization draw_channel(int n_r, int n_t, Rng& rng) {
  if (n_r < 1 || n_t < 1) throw DimensionMismatchError("channel dimensions must be >= 1");
  ChannelRealization out{CMatrix(n_r, n_t)};
  draw_channel_into(out.h, rng);
  return out;
}

void draw_channel_into(CMatrix& h, Rng& rng) {
  for (Eigen::Index v = 0; v < h.cols(); ++v) {
    for (Eigen::Index r = 0; r < h.rows(); ++r) h(r, v) = rng.complex_normal(1.0);
  }
}

double noise_variance_from_snr(double rho_db, double signal_power) {
  return signal_power / std::pow(10.0, rho_db / 10.0);
}

CVector draw_noise(int dim, double n0, Rng& rng) {
  CVector n = CVector::Zero(dim);
  add_noise(n, n0, rng);
  return n;
}

void add_noise(CVector& y, double n0, Rng& rng) {
  if (n0 <= 0.0) return;
  for (Eigen::Index i = 0; i < y.size(); ++i) y(i) += rng.complex_normal(n0);
}

}  // namespace stbcsm
