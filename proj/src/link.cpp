#include "stbcsm/link.hpp"

#include "stbcsm/error.hpp"

namespace stbcsm {

std::string to_string(Variant v) {
  switch (v) {
    case Variant::Plain: return "plain";
    case Variant::PrecodedZf: return "precoded-zf";
    case Variant::PrecodedMmse: return "precoded-mmse";
    case Variant::Abf: return "abf";
    case Variant::HbfZf: return "hbf-zf";
    case Variant::HbfMmse: return "hbf-mmse";
  }
  return "?";
}

Variant parse_variant(const std::string& s) {
  for (Variant v : {Variant::Plain, Variant::PrecodedZf, Variant::PrecodedMmse, Variant::Abf, Variant::HbfZf,
                    Variant::HbfMmse}) {
    if (to_string(v) == s) return v;
  }
  throw ConfigError(ConfigError::Kind::InvalidValue, "unknown variant '" + s + "'");
}

bool uses_precoder(Variant v) { return precoder_kind(v) != PrecoderKind::Identity; }

bool uses_array(Variant v) { return v == Variant::Abf || v == Variant::HbfZf || v == Variant::HbfMmse; }

PrecoderKind precoder_kind(Variant v) {
  switch (v) {
    case Variant::PrecodedZf:
    case Variant::HbfZf:
      return PrecoderKind::ZeroForcing;
    case Variant::PrecodedMmse:
    case Variant::HbfMmse:
      return PrecoderKind::Mmse;
    default:
      return PrecoderKind::Identity;
  }
}

LinkSpec LinkSpec::make(Variant v, int elements) {
  LinkSpec spec{v, std::nullopt};
  if (uses_array(v)) spec.array = ArrayConfig::with_elements(elements);
  return spec;
}

void LinkSpec::validate() const {
  if (uses_array(variant) && !array) {
    throw ConfigError(ConfigError::Kind::MissingComponent, "variant " + to_string(variant) + " requires an array");
  }
  if (!uses_array(variant) && array) {
    throw ConfigError(ConfigError::Kind::MissingComponent,
                      "variant " + to_string(variant) + " does not take an array");
  }
  if (array) array->validate();
}

CMatrix LinkSpec::analog_channel(const CMatrix& h) const {
  if (array) return apply_abf(h, *array);
  return h;
}

}  // namespace stbcsm
