#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "stbcsm/config.hpp"

namespace stbcsm {

/// One measured (SNR, BER) point.
struct BerRecord {
  Scheme scheme = Scheme::Sm;
  Variant variant = Variant::Plain;
  int n_t = 0;
  int n_r = 0;
  std::string modulation;
  int elements = 1;
  double theta = 0.0;
  double snr_db = 0.0;
  std::uint64_t bits = 0;
  std::uint64_t errors = 0;
  double ber = 0.0;
  std::uint64_t seed = 0;
  std::uint64_t channel_redraws = 0;  // singular ZF channels replaced
  double wall_seconds = 0.0;

  /// 95% normal-approximation half-width of the BER estimate.
  double ci95_half_width() const;

  /// Equality over every field except wall_seconds.
  bool same_result(const BerRecord& other) const;
};

/// Blocks simulated per seeded batch. Stopping is checked after each batch
/// in batch order, which keeps results independent of the worker count.
inline constexpr int kBatchBlocks = 256;

/// Default theta search resolution for STBC-SM when no override is given.
inline constexpr double kThetaGridStep = 0.001;

/// Seed of grid point `index` within a sweep.
std::uint64_t point_seed(std::uint64_t master_seed, std::size_t index);

/// Rotation angle used for a config: the override, else the cached grid
/// search optimum. Zero for schemes without rotation.
double resolve_theta(const SimConfig& cfg);

int bits_per_block(const SimConfig& cfg);

BerRecord run_point(const SimConfig& cfg, double snr_db, std::uint64_t stream_seed, int workers = 1);

/// One record per grid point, in grid order, unless stop_ber ends the sweep
/// early. Aborts on the first configuration error.
std::vector<BerRecord> run_sweep(const SimConfig& cfg, int workers = 1);

/// SNR at which the curve crosses target_ber, by linear interpolation of
/// log10(BER) between the first bracketing pair of points with errors.
double snr_at_ber(std::span<const BerRecord> curve, double target_ber);

/// snr_at_ber(a) - snr_at_ber(b). Positive when curve a needs more SNR.
double snr_gap_at_ber(std::span<const BerRecord> a, std::span<const BerRecord> b, double target_ber);

}  // namespace stbcsm
