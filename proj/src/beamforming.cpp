#include "stbcsm/beamforming.hpp"

#include <cmath>
#include <numbers>

#include "stbcsm/error.hpp"

namespace stbcsm {

ArrayConfig ArrayConfig::with_elements(int elements) {
  ArrayConfig cfg;
  cfg.elements = elements;
  return cfg;
}

void ArrayConfig::validate() const {
  if (elements < 1) throw ConfigError(ConfigError::Kind::InvalidValue, "array elements must be >= 1");
  if (!(spacing > 0.0)) throw ConfigError(ConfigError::Kind::InvalidValue, "element spacing must be > 0");
  if (!(wavelength > 0.0)) throw ConfigError(ConfigError::Kind::InvalidValue, "wavelength must be > 0");
  if (!(std::abs(aod_rad) <= std::numbers::pi / 2.0)) {
    throw ConfigError(ConfigError::Kind::InvalidValue, "angle of departure must lie in [-pi/2, pi/2]");
  }
}

double ArrayConfig::phase_step(double angle) const {
  return spacing * (2.0 * std::numbers::pi / wavelength) * std::sin(angle);
}

CVector steering_weights(const ArrayConfig& cfg) {
  cfg.validate();
  const double delta = cfg.phase_step(cfg.aod_rad);
  CVector w(cfg.elements);
  for (int k = 0; k < cfg.elements; ++k) w(k) = std::polar(1.0, -k * delta);
  return w;
}

CVector array_response(const ArrayConfig& cfg, double angle) {
  const double delta = cfg.phase_step(angle);
  CVector a(cfg.elements);
  for (int k = 0; k < cfg.elements; ++k) a(k) = std::polar(1.0, -k * delta);
  return a;
}

cd beam_response(const ArrayConfig& cfg, double angle) {
  return steering_weights(cfg).dot(array_response(cfg, angle));
}

double array_gain_db(int elements) { return 20.0 * std::log10(static_cast<double>(elements)); }

double incremental_gain_db(int elements) {
  if (elements < 2) throw Error("incremental gain needs at least 2 elements");
  return 20.0 * std::log10(static_cast<double>(elements) / (elements - 1));
}

CMatrix apply_abf(const CMatrix& h, const ArrayConfig& cfg) {
  cfg.validate();
  if (cfg.elements == 1) return h;
  return array_gain_factor(cfg.elements) * h;
}

}  // namespace stbcsm
