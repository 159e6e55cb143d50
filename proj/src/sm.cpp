#include "stbcsm/sm.hpp"

#include <limits>

#include "stbcsm/channel.hpp"
#include "stbcsm/error.hpp"

namespace stbcsm {

int sm_bits_per_use(int n_t, const Constellation& c) { return ilog2(n_t) + c.bits_per_symbol(); }

SmFrame sm_map(BitSpan bits, int n_t, const Constellation& c) {
  if (!is_power_of_two(n_t)) throw ConfigError(ConfigError::Kind::InvalidValue, "SM needs n_t a power of two");
  const int index_bits = ilog2(n_t);
  if (static_cast<int>(bits.size()) != index_bits + c.bits_per_symbol()) {
    throw LengthMismatchError("sm_map: expected " + std::to_string(index_bits + c.bits_per_symbol()) +
                              " bits, got " + std::to_string(bits.size()));
  }
  SmFrame f;
  f.bits.assign(bits.begin(), bits.end());
  f.antenna = static_cast<int>(bits_to_uint(bits.first(static_cast<std::size_t>(index_bits))));
  f.symbol_label = static_cast<int>(bits_to_uint(bits.subspan(static_cast<std::size_t>(index_bits))));
  f.symbol = c.point(f.symbol_label);
  f.x = CVector::Zero(n_t);
  f.x(f.antenna) = f.symbol;
  return f;
}

SmDecision sm_ml_detect(const CVector& y, const CMatrix& h_eff, const Constellation& c, int index_count) {
  if (h_eff.cols() < index_count || h_eff.rows() != y.size()) {
    throw DimensionMismatchError("sm_ml_detect: channel/observation dimensions do not agree");
  }
  SmDecision best;
  double best_metric = std::numeric_limits<double>::infinity();
  const auto points = c.points();
  for (int l = 0; l < index_count; ++l) {
    const auto col = h_eff.col(l);
    for (int s = 0; s < c.order(); ++s) {
      const cd sym = points[static_cast<std::size_t>(s)];
      double metric = 0.0;
      for (Eigen::Index i = 0; i < y.size(); ++i) metric += std::norm(y(i) - col(i) * sym);
      if (metric < best_metric) {
        best_metric = metric;
        best.antenna = l;
        best.symbol_label = s;
      }
    }
  }
  best.symbol = c.point(best.symbol_label);
  const int index_bits = ilog2(index_count);
  best.bits.resize(static_cast<std::size_t>(index_bits + c.bits_per_symbol()));
  uint_to_bits(static_cast<std::uint32_t>(best.antenna), index_bits, best.bits.data());
  uint_to_bits(static_cast<std::uint32_t>(best.symbol_label), c.bits_per_symbol(), best.bits.data() + index_bits);
  return best;
}

CMatrix sm_effective_channel(const CMatrix& h, const LinkSpec& link, double n0) {
  link.validate();
  const CMatrix h_analog = link.analog_channel(h);
  if (!uses_precoder(link.variant)) return h_analog;
  if (h.rows() < h.cols()) {
    throw ConfigError(ConfigError::Kind::Unsupported, "precoded SM needs n_r >= n_t");
  }
  const Precoder p = make_precoder(precoder_kind(link.variant), h_analog, n0);
  return effective_channel(h_analog, p).leftCols(h.cols());
}

SmTransmission sm_transmit_receive(const SmFrame& frame, const CMatrix& h, const LinkSpec& link, double n0, Rng& rng) {
  if (frame.x.size() != h.cols()) throw DimensionMismatchError("sm_transmit_receive: frame and channel disagree");
  SmTransmission out;
  out.h_eff = sm_effective_channel(h, link, n0);
  out.y = out.h_eff.col(frame.antenna) * frame.symbol;
  add_noise(out.y, n0, rng);
  return out;
}

}  // namespace stbcsm
