#pragma once

#include "stbcsm/types.hpp"

namespace stbcsm {

inline constexpr double kDefaultWavelength = 0.005;  // 60 GHz carrier

/// Uniform linear array behind every transmit antenna.
struct ArrayConfig {
  int elements = 1;
  double spacing = kDefaultWavelength / 2.0;
  double wavelength = kDefaultWavelength;
  double aod_rad = 0.0;

  /// Half-wavelength ULA steered to boresight.
  static ArrayConfig with_elements(int elements);

  void validate() const;

  /// Electrical phase step between adjacent elements toward `angle`.
  double phase_step(double angle) const;
};

/// w[k] = exp(-j k delta), delta = d (2 pi / lambda) sin(aod).
CVector steering_weights(const ArrayConfig& cfg);

/// Array response toward `angle`, conjugate-matched so that
/// w^H a(aod) == L.
CVector array_response(const ArrayConfig& cfg, double angle);

/// w^H a(angle).
cd beam_response(const ArrayConfig& cfg, double angle);

/// Amplitude gain of L matched elements relative to one.
inline double array_gain_factor(int elements) { return static_cast<double>(elements); }

/// Cumulative power gain, 20 log10(L).
double array_gain_db(int elements);

/// Gain of L elements over L - 1 elements, 20 log10(L / (L - 1)).
double incremental_gain_db(int elements);

/// Transmit-side ABF seen through the fading channel: each path combines
/// coherently across L matched elements, giving L * H.
CMatrix apply_abf(const CMatrix& h, const ArrayConfig& cfg);

}  // namespace stbcsm
