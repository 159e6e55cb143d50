#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "stbcsm/link.hpp"

namespace stbcsm {

enum class Scheme { Sm, StbcSm, Vblast };

std::string to_string(Scheme s);
Scheme parse_scheme(const std::string& s);

/// Full description of one BER-vs-SNR curve.
struct SimConfig {
  Scheme scheme = Scheme::Sm;
  int n_t = 2;
  int n_r = 4;
  std::string modulation = "BPSK";
  Variant variant = Variant::Plain;
  int elements = 1;  // L, array elements per transmit antenna
  std::vector<double> snr_grid;
  std::uint64_t min_bit_errors = 100;
  std::uint64_t max_bits = 10'000'000;
  std::uint64_t master_seed = 1;
  std::optional<double> theta_override;
  // Ends a sweep after the first point whose BER falls below this value.
  // Zero keeps every grid point.
  double stop_ber = 0.0;

  void validate() const;
  LinkSpec link() const { return LinkSpec::make(variant, elements); }

  bool operator==(const SimConfig&) const = default;
};

/// Recognized configuration keys, in canonical order.
const std::vector<std::string>& config_keys();

/// Sets one key from its text form. Throws ConfigError(UnknownKey) or
/// ConfigError(InvalidValue).
void apply_setting(SimConfig& cfg, const std::string& key, const std::string& value);

/// Flat "key = value" text; '#' starts a comment.
SimConfig parse_config(std::istream& in);
SimConfig load_config(const std::string& path);

/// "0,2,4" or "start:step:stop" (inclusive).
std::vector<double> parse_snr_grid(const std::string& text);

std::string format_config(const SimConfig& cfg);

}  // namespace stbcsm
