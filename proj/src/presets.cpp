#include "stbcsm/presets.hpp"

#include "stbcsm/error.hpp"

namespace stbcsm {
namespace {

SimConfig curve(Scheme scheme, Variant variant, int elements) {
  SimConfig c;
  c.scheme = scheme;
  // 2 bits/s/Hz with BPSK: 2x4 SM and V-BLAST, 4x4 STBC-SM.
  c.n_t = scheme == Scheme::StbcSm ? 4 : 2;
  c.n_r = 4;
  c.modulation = "BPSK";
  c.variant = variant;
  c.elements = elements;
  return c;
}

}  // namespace

const std::vector<std::string>& figure_names() {
  static const std::vector<std::string> names = {"fig2", "fig3", "fig4", "fig5", "fig6"};
  return names;
}

FigurePreset figure_preset(const std::string& name, bool publication, std::uint64_t master_seed) {
  FigurePreset p{name, "snr_db", {}};
  auto add = [&](Scheme s, Variant v, int l) { p.curves.push_back(curve(s, v, l)); };
  if (name == "fig2") {
    add(Scheme::Sm, Variant::Plain, 1);
    add(Scheme::StbcSm, Variant::Plain, 1);
    add(Scheme::Vblast, Variant::Plain, 1);
    add(Scheme::Sm, Variant::PrecodedZf, 1);
    add(Scheme::Sm, Variant::PrecodedMmse, 1);
    add(Scheme::StbcSm, Variant::PrecodedZf, 1);
    add(Scheme::StbcSm, Variant::PrecodedMmse, 1);
  } else if (name == "fig3") {
    for (Scheme s : {Scheme::Sm, Scheme::StbcSm}) {
      for (int l = 1; l <= 4; ++l) add(s, Variant::Abf, l);
    }
  } else if (name == "fig4" || name == "fig5") {
    const Scheme s = name == "fig4" ? Scheme::Sm : Scheme::StbcSm;
    add(s, Variant::Plain, 1);
    for (Variant v : {Variant::HbfZf, Variant::HbfMmse}) {
      for (int l = 1; l <= 4; ++l) add(s, v, l);
    }
  } else if (name == "fig6") {
    p.x_axis = "L";
    for (Variant v : {Variant::Abf, Variant::HbfZf}) {
      for (Scheme s : {Scheme::Sm, Scheme::StbcSm}) {
        for (int l = 1; l <= 8; ++l) add(s, v, l);
      }
    }
  } else {
    throw ConfigError(ConfigError::Kind::InvalidValue, "unknown figure '" + name + "'");
  }

  std::vector<double> grid;
  if (p.x_axis == "L") {
    grid = {-5.0};
  } else {
    for (int s = 0; s <= 30; s += 2) grid.push_back(s);
  }
  for (auto& c : p.curves) {
    c.snr_grid = grid;
    c.master_seed = master_seed;
    c.min_bit_errors = publication ? 400 : 100;
    c.max_bits = publication ? 1'000'000'000ULL : 10'000'000ULL;
    c.stop_ber = publication ? 1e-7 : 1e-6;
  }
  return p;
}

}  // namespace stbcsm
