#pragma once

#include <optional>
#include <string>

#include "stbcsm/beamforming.hpp"
#include "stbcsm/precoding.hpp"

namespace stbcsm {

enum class Variant { Plain, PrecodedZf, PrecodedMmse, Abf, HbfZf, HbfMmse };

std::string to_string(Variant v);
Variant parse_variant(const std::string& s);

bool uses_precoder(Variant v);
bool uses_array(Variant v);
PrecoderKind precoder_kind(Variant v);

/// How a scheme's symbols reach the channel: plain, digitally precoded,
/// analog beamformed, or both.
struct LinkSpec {
  Variant variant = Variant::Plain;
  std::optional<ArrayConfig> array;

  static LinkSpec plain() { return {}; }
  static LinkSpec make(Variant v, int elements);

  /// Throws ConfigError(MissingComponent) when the array is absent for an
  /// ABF/HBF variant or present for a variant that does not use it.
  void validate() const;

  /// Channel seen after the analog stage: L * H for ABF/HBF, H otherwise.
  CMatrix analog_channel(const CMatrix& h) const;
};

}  // namespace stbcsm
