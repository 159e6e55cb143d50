#pragma once

#include <span>
#include <string>
#include <vector>

#include "stbcsm/types.hpp"

namespace stbcsm {

enum class ModulationKind { Psk, Qam };

/// M-ary symbol set with unit average energy.
///
/// Points are stored in label order: the point at index i carries the label
/// whose MSB-first integer value is i. PSK and square QAM use Gray labeling.
/// BPSK maps bit 0 to +1 and bit 1 to -1.
class Constellation {
 public:
  static Constellation build(ModulationKind kind, int order);

  /// Accepts "BPSK", "QPSK", "8PSK", "16QAM", "64QAM", also "PSK4" style.
  static Constellation parse(const std::string& name);

  ModulationKind kind() const { return kind_; }
  int order() const { return static_cast<int>(points_.size()); }
  int bits_per_symbol() const { return bits_per_symbol_; }
  std::span<const cd> points() const { return points_; }
  cd point(int label) const { return points_[static_cast<std::size_t>(label)]; }
  Bits label_bits(int label) const;
  std::string name() const;

  cd map_bits(BitSpan bits) const;

  /// Label of the closest point. Ties resolve to the lowest label.
  int nearest_label(cd value) const;

 private:
  Constellation(ModulationKind kind, std::vector<cd> points);

  ModulationKind kind_;
  std::vector<cd> points_;
  int bits_per_symbol_;
};

inline Constellation build_constellation(ModulationKind kind, int order) {
  return Constellation::build(kind, order);
}

inline cd map_bits(const Constellation& c, BitSpan bits) { return c.map_bits(bits); }

}  // namespace stbcsm
