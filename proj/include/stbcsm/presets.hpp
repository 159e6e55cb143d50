#pragma once

#include <string>
#include <vector>

#include "stbcsm/config.hpp"

namespace stbcsm {

struct FigurePreset {
  std::string name;
  std::string x_axis;  // "snr_db" or "L"
  std::vector<SimConfig> curves;
};

const std::vector<std::string>& figure_names();

/// Curve bundle for fig2..fig6. Desk scale stops at 100 errors / 1e7 bits;
/// publication scale at 400 errors / 1e9 bits.
FigurePreset figure_preset(const std::string& name, bool publication = false, std::uint64_t master_seed = 1);

}  // namespace stbcsm
