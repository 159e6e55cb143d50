#include "stbcsm/constellation.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>

#include "stbcsm/error.hpp"

namespace stbcsm {
namespace {

std::uint32_t gray(std::uint32_t k) { return k ^ (k >> 1); }

std::vector<cd> psk_points(int order) {
  std::vector<cd> pts(static_cast<std::size_t>(order));
  const double offset = order == 4 ? std::numbers::pi / 4.0 : 0.0;
  for (int k = 0; k < order; ++k) {
    const double angle = offset + 2.0 * std::numbers::pi * k / order;
    pts[gray(static_cast<std::uint32_t>(k))] = std::polar(1.0, angle);
  }
  if (order == 2) {
    // exact +/-1 rather than polar(1, pi)
    pts[0] = {1.0, 0.0};
    pts[1] = {-1.0, 0.0};
  }
  return pts;
}

std::vector<cd> square_qam_points(int order) {
  const int side = static_cast<int>(std::lround(std::sqrt(order)));
  const int half_bits = ilog2(side);
  const double scale = 1.0 / std::sqrt(2.0 * (order - 1) / 3.0);
  std::vector<cd> pts(static_cast<std::size_t>(order));
  for (int i = 0; i < side; ++i) {
    for (int q = 0; q < side; ++q) {
      const double re = 2.0 * i - (side - 1);
      const double im = 2.0 * q - (side - 1);
      const std::uint32_t label = (gray(static_cast<std::uint32_t>(i)) << half_bits) |
                                  gray(static_cast<std::uint32_t>(q));
      pts[label] = cd(re, im) * scale;
    }
  }
  return pts;
}

}  // namespace

Constellation::Constellation(ModulationKind kind, std::vector<cd> points)
    : kind_(kind), points_(std::move(points)), bits_per_symbol_(ilog2(static_cast<long long>(points_.size()))) {}

Constellation Constellation::build(ModulationKind kind, int order) {
  if (order < 2 || !is_power_of_two(order)) {
    throw InvalidOrderError("modulation order must be a power of two >= 2, got " + std::to_string(order));
  }
  if (kind == ModulationKind::Psk) return Constellation(kind, psk_points(order));
  if (ilog2(order) % 2 != 0) {
    throw InvalidOrderError("non-square QAM is not supported, got order " + std::to_string(order));
  }
  return Constellation(kind, square_qam_points(order));
}

Constellation Constellation::parse(const std::string& name) {
  std::string s;
  for (char ch : name) s.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
  if (s == "BPSK") return build(ModulationKind::Psk, 2);
  if (s == "QPSK") return build(ModulationKind::Psk, 4);
  auto parse_order = [&](const std::string& digits) -> int {
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw InvalidOrderError("unrecognized modulation '" + name + "'");
    }
    return std::stoi(digits);
  };
  for (const auto& [suffix, kind] : {std::pair{std::string("PSK"), ModulationKind::Psk},
                                     std::pair{std::string("QAM"), ModulationKind::Qam}}) {
    if (s.size() > suffix.size() && s.ends_with(suffix)) {
      return build(kind, parse_order(s.substr(0, s.size() - suffix.size())));
    }
    if (s.size() > suffix.size() && s.starts_with(suffix)) {
      return build(kind, parse_order(s.substr(suffix.size())));
    }
  }
  throw InvalidOrderError("unrecognized modulation '" + name + "'");
}

Bits Constellation::label_bits(int label) const {
  Bits out(static_cast<std::size_t>(bits_per_symbol_));
  uint_to_bits(static_cast<std::uint32_t>(label), bits_per_symbol_, out.data());
  return out;
}

std::string Constellation::name() const {
  const int m = order();
  if (kind_ == ModulationKind::Psk) {
    if (m == 2) return "BPSK";
    if (m == 4) return "QPSK";
    return std::to_string(m) + "PSK";
  }
  return std::to_string(m) + "QAM";
}

cd Constellation::map_bits(BitSpan bits) const {
  if (static_cast<int>(bits.size()) != bits_per_symbol_) {
    throw LengthMismatchError("expected " + std::to_string(bits_per_symbol_) + " bits, got " +
                              std::to_string(bits.size()));
  }
  return points_[bits_to_uint(bits)];
}

int Constellation::nearest_label(cd value) const {
  int best = 0;
  double best_d = std::norm(value - points_[0]);
  for (int i = 1; i < order(); ++i) {
    const double d = std::norm(value - points_[static_cast<std::size_t>(i)]);
    if (d < best_d) {
      best_d = d;
      best = i;
    }
  }
  return best;
}

}  // namespace stbcsm
