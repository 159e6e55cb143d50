#include "stbcsm/stbc_sm.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "stbcsm/channel.hpp"
#include "stbcsm/error.hpp"

namespace stbcsm {
namespace {

using Pair = std::pair<int, int>;

// Candidate pairs ordered by antenna distance, then by starting antenna.
std::vector<Pair> candidate_pairs(int n_t) {
  std::vector<Pair> out;
  std::vector<std::vector<bool>> seen(static_cast<std::size_t>(n_t), std::vector<bool>(static_cast<std::size_t>(n_t)));
  for (int d = 1; d <= n_t / 2; ++d) {
    for (int s = 0; s < n_t; ++s) {
      const int t = (s + d) % n_t;
      auto lo = static_cast<std::size_t>(std::min(s, t));
      auto hi = static_cast<std::size_t>(std::max(s, t));
      if (seen[lo][hi]) continue;
      seen[lo][hi] = true;
      out.emplace_back(s, t);
    }
  }
  return out;
}

// Depth-first fill of consecutive codebooks with disjoint pairs.
class BookFiller {
 public:
  BookFiller(int n_t, int total, int per_book)
      : total_(total), per_book_(per_book), cand_(candidate_pairs(n_t)), used_(cand_.size(), false),
        busy_(static_cast<std::size_t>(n_t), false) {}

  bool fill() { return place(0, 0); }

  const std::vector<Pair>& chosen() const { return chosen_; }

 private:
  bool place(int slot_in_book, std::size_t start) {
    if (static_cast<int>(chosen_.size()) == total_) return true;
    if (slot_in_book == per_book_) {
      std::fill(busy_.begin(), busy_.end(), false);
      const bool ok = place(0, 0);
      if (!ok) restore_busy();
      return ok;
    }
    for (std::size_t i = start; i < cand_.size(); ++i) {
      if (used_[i]) continue;
      const auto [a, b] = cand_[i];
      if (busy_[static_cast<std::size_t>(a)] || busy_[static_cast<std::size_t>(b)]) continue;
      used_[i] = true;
      busy_[static_cast<std::size_t>(a)] = busy_[static_cast<std::size_t>(b)] = true;
      chosen_.push_back(cand_[i]);
      if (place(slot_in_book + 1, i + 1)) return true;
      chosen_.pop_back();
      used_[i] = false;
      busy_[static_cast<std::size_t>(a)] = busy_[static_cast<std::size_t>(b)] = false;
    }
    return false;
  }

  // Re-marks the antennas of the current (last, full) book after a failed
  // attempt at the next book.
  void restore_busy() {
    std::fill(busy_.begin(), busy_.end(), false);
    const std::size_t begin = chosen_.size() - static_cast<std::size_t>(per_book_);
    for (std::size_t k = begin; k < chosen_.size(); ++k) {
      busy_[static_cast<std::size_t>(chosen_[k].first)] = true;
      busy_[static_cast<std::size_t>(chosen_[k].second)] = true;
    }
  }

  int total_;
  int per_book_;
  std::vector<Pair> cand_;
  std::vector<bool> used_;
  std::vector<bool> busy_;
  std::vector<Pair> chosen_;
};

}  // namespace

int stbcsm_codeword_count(int n_t) {
  if (n_t < 2) throw ConfigError(ConfigError::Kind::InvalidValue, "STBC-SM needs n_t >= 2");
  const long long pairs = static_cast<long long>(n_t) * (n_t - 1) / 2;
  long long c = 1;
  while (c * 2 <= pairs) c *= 2;
  return static_cast<int>(c);
}

StbcsmCodebook StbcsmCodebook::build(int n_t, double theta) {
  StbcsmCodebook book;
  const int c = stbcsm_codeword_count(n_t);
  book.n_t_ = n_t;
  book.per_book_ = n_t / 2;
  book.book_count_ = (c + book.per_book_ - 1) / book.per_book_;
  book.theta_ = theta;
  BookFiller filler(n_t, c, book.per_book_);
  if (!filler.fill()) throw Error("no disjoint codebook layout found for n_t = " + std::to_string(n_t));
  const auto& pairs = filler.chosen();
  book.descriptors_.reserve(pairs.size());
  for (std::size_t l = 0; l < pairs.size(); ++l) {
    const int i = static_cast<int>(l) / book.per_book_;
    book.descriptors_.push_back({pairs[l].first, pairs[l].second, std::polar(1.0, i * theta)});
  }
  return book;
}

double spectral_efficiency(int codewords, int order) {
  return 0.5 * std::log2(static_cast<double>(codewords)) + std::log2(static_cast<double>(order));
}

CMatrix codeword_matrix(const CodewordDescriptor& d, int n_t, cd x1, cd x2) {
  CMatrix x = CMatrix::Zero(2, n_t);
  x(0, d.first) = d.rotation * x1;
  x(0, d.second) = d.rotation * x2;
  x(1, d.first) = -d.rotation * std::conj(x2);
  x(1, d.second) = d.rotation * std::conj(x1);
  return x;
}

double min_coding_gain_distance(int n_t, const Constellation& c, double theta) {
  const StbcsmCodebook book = StbcsmCodebook::build(n_t, theta);
  const int m = c.order();
  // Every codeword matrix, indexed [codeword][label1 * M + label2].
  std::vector<std::vector<CMatrix>> words(static_cast<std::size_t>(book.codeword_count()));
  for (int l = 0; l < book.codeword_count(); ++l) {
    for (int s1 = 0; s1 < m; ++s1) {
      for (int s2 = 0; s2 < m; ++s2) {
        words[static_cast<std::size_t>(l)].push_back(codeword_matrix(book.descriptor(l), n_t, c.point(s1), c.point(s2)));
      }
    }
  }
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < book.codeword_count(); ++i) {
    for (int j = i + 1; j < book.codeword_count(); ++j) {
      if (book.book_of(i) == book.book_of(j)) continue;
      for (const auto& xi : words[static_cast<std::size_t>(i)]) {
        for (const auto& xj : words[static_cast<std::size_t>(j)]) {
          const CMatrix d = xi - xj;
          const double r0 = d.row(0).squaredNorm();
          const double r1 = d.row(1).squaredNorm();
          const double cross = std::norm(d.row(0).dot(d.row(1)));
          best = std::min(best, std::max(0.0, r0 * r1 - cross));
        }
      }
    }
  }
  // A single codebook has no cross-book pairs to constrain theta.
  return std::isinf(best) ? 0.0 : best;
}

RotationSearch optimize_rotation_angle(int n_t, const Constellation& c, double grid_step) {
  if (!(grid_step > 0.0) || grid_step > 0.01) {
    throw ConfigError(ConfigError::Kind::InvalidValue, "grid step must lie in (0, 0.01] rad");
  }
  const auto steps = static_cast<long>(std::floor(std::numbers::pi / grid_step + 1e-9));
  std::vector<double> cgd(static_cast<std::size_t>(steps) + 1);
  double peak = 0.0;
  for (long k = 0; k <= steps; ++k) {
    cgd[static_cast<std::size_t>(k)] = min_coding_gain_distance(n_t, c, k * grid_step);
    peak = std::max(peak, cgd[static_cast<std::size_t>(k)]);
  }
  // local peaks are compared after refinement so mirror-image optima resolve to the lowest angle
  const double tol = 1e-9 * std::max(1.0, peak);
  auto at = [&](long k) { return cgd[static_cast<std::size_t>(k)]; };
  struct Peak {
    long first, last;
    double value;
  };
  std::vector<Peak> peaks;
  for (long k = 0; k <= steps;) {
    long end = k;
    while (end < steps && std::abs(at(end + 1) - at(k)) <= tol) ++end;
    const bool left_ok = k == 0 || at(k - 1) < at(k);
    const bool right_ok = end == steps || at(end + 1) < at(k);
    if (left_ok && right_ok && at(k) > tol) {
      double value = at(k);
      if (end == k) {
        double lo = std::max(0.0, (k - 1) * grid_step);
        double hi = std::min(std::numbers::pi, (k + 1) * grid_step);
        const double g = (std::sqrt(5.0) - 1.0) / 2.0;
        for (int it = 0; it < 60 && hi - lo > 1e-12; ++it) {
          const double a = hi - g * (hi - lo);
          const double b = lo + g * (hi - lo);
          if (min_coding_gain_distance(n_t, c, a) < min_coding_gain_distance(n_t, c, b)) lo = a;
          else hi = b;
        }
        value = std::max(value, min_coding_gain_distance(n_t, c, 0.5 * (lo + hi)));
      }
      peaks.push_back({k, end, value});
    }
    k = end + 1;
  }
  if (peaks.empty()) return {0.0, at(0)};
  double best = 0.0;
  for (const auto& pk : peaks) best = std::max(best, pk.value);
  for (const auto& pk : peaks) {
    if (pk.value >= best - 1e-9 * std::max(1.0, best)) {
      const long mid = (pk.first + pk.last) / 2;
      return {mid * grid_step, at(mid)};
    }
  }
  return {0.0, at(0)};
}

int stbcsm_bits_per_block(const StbcsmCodebook& book, const Constellation& c) {
  return book.index_bits() + 2 * c.bits_per_symbol();
}

StbcsmBlock stbcsm_map(BitSpan bits, const StbcsmCodebook& book, const Constellation& c) {
  const int expected = stbcsm_bits_per_block(book, c);
  if (static_cast<int>(bits.size()) != expected) {
    throw LengthMismatchError("stbcsm_map: expected " + std::to_string(expected) + " bits, got " +
                              std::to_string(bits.size()));
  }
  const auto ib = static_cast<std::size_t>(book.index_bits());
  const auto sb = static_cast<std::size_t>(c.bits_per_symbol());
  StbcsmBlock block;
  block.bits.assign(bits.begin(), bits.end());
  block.codeword = static_cast<int>(bits_to_uint(bits.first(ib)));
  block.label1 = static_cast<int>(bits_to_uint(bits.subspan(ib, sb)));
  block.label2 = static_cast<int>(bits_to_uint(bits.subspan(ib + sb, sb)));
  block.x1 = c.point(block.label1);
  block.x2 = c.point(block.label2);
  block.codeword_matrix = codeword_matrix(book.descriptor(block.codeword), book.n_t(), block.x1, block.x2);
  return block;
}

CMatrix equivalent_channel(const CMatrix& h, const CodewordDescriptor& d) {
  const Eigen::Index n_r = h.rows();
  CMatrix e(2 * n_r, 2);
  const cd phi = d.rotation;
  e.block(0, 0, n_r, 1) = phi * h.col(d.first);
  e.block(0, 1, n_r, 1) = phi * h.col(d.second);
  e.block(n_r, 0, n_r, 1) = std::conj(phi) * h.col(d.second).conjugate();
  e.block(n_r, 1, n_r, 1) = -std::conj(phi) * h.col(d.first).conjugate();
  return e;
}

namespace {

StbcsmDecision finish_decision(int l, int s1, int s2, const StbcsmCodebook& book, const Constellation& c) {
  StbcsmDecision out{l, s1, s2, c.point(s1), c.point(s2), {}};
  const int ib = book.index_bits();
  const int sb = c.bits_per_symbol();
  out.bits.resize(static_cast<std::size_t>(ib + 2 * sb));
  uint_to_bits(static_cast<std::uint32_t>(l), ib, out.bits.data());
  uint_to_bits(static_cast<std::uint32_t>(s1), sb, out.bits.data() + ib);
  uint_to_bits(static_cast<std::uint32_t>(s2), sb, out.bits.data() + ib + sb);
  return out;
}

void check_equivalents(const CVector& y, std::span<const CMatrix> eq, const StbcsmCodebook& book) {
  if (static_cast<int>(eq.size()) != book.codeword_count()) {
    throw DimensionMismatchError("one equivalent channel per codeword is required");
  }
  for (const auto& e : eq) {
    if (e.rows() != y.size() || e.cols() != 2) throw DimensionMismatchError("equivalent channel must be 2 n_r x 2");
  }
}

}  // namespace

StbcsmDecision stbcsm_ml_detect(const CVector& y, std::span<const CMatrix> equivalents, const StbcsmCodebook& book,
                                const Constellation& c) {
  check_equivalents(y, equivalents, book);
  const auto pts = c.points();
  const int m = c.order();
  double best = std::numeric_limits<double>::infinity();
  int bl = 0, b1 = 0, b2 = 0;
  for (int l = 0; l < book.codeword_count(); ++l) {
    const CMatrix& e = equivalents[static_cast<std::size_t>(l)];
    for (int s1 = 0; s1 < m; ++s1) {
      for (int s2 = 0; s2 < m; ++s2) {
        const cd u1 = pts[static_cast<std::size_t>(s1)];
        const cd u2 = pts[static_cast<std::size_t>(s2)];
        double metric = 0.0;
        for (Eigen::Index i = 0; i < y.size(); ++i) metric += std::norm(y(i) - e(i, 0) * u1 - e(i, 1) * u2);
        if (metric < best) {
          best = metric;
          bl = l;
          b1 = s1;
          b2 = s2;
        }
      }
    }
  }
  return finish_decision(bl, b1, b2, book, c);
}

StbcsmDecision stbcsm_ml_detect(const CVector& y, const CMatrix& h, const StbcsmCodebook& book,
                                const Constellation& c) {
  std::vector<CMatrix> eq;
  eq.reserve(static_cast<std::size_t>(book.codeword_count()));
  for (const auto& d : book.descriptors()) eq.push_back(equivalent_channel(h, d));
  return stbcsm_ml_detect(y, eq, book, c);
}

StbcsmDecision stbcsm_ml_detect_decoupled(const CVector& y, std::span<const CMatrix> equivalents,
                                          const StbcsmCodebook& book, const Constellation& c) {
  check_equivalents(y, equivalents, book);
  const auto pts = c.points();
  const double y_energy = y.squaredNorm();
  double best = std::numeric_limits<double>::infinity();
  int bl = 0, b1 = 0, b2 = 0;
  for (int l = 0; l < book.codeword_count(); ++l) {
    const CMatrix& e = equivalents[static_cast<std::size_t>(l)];
    int labels[2] = {0, 0};
    double metric = y_energy;
    for (int k = 0; k < 2; ++k) {
      const cd z = e.col(k).dot(y);
      const double g = e.col(k).squaredNorm();
      double part = std::numeric_limits<double>::infinity();
      for (int s = 0; s < c.order(); ++s) {
        const cd u = pts[static_cast<std::size_t>(s)];
        const double v = g * std::norm(u) - 2.0 * std::real(std::conj(u) * z);
        if (v < part) {
          part = v;
          labels[k] = s;
        }
      }
      metric += part;
    }
    if (metric < best) {
      best = metric;
      bl = l;
      b1 = labels[0];
      b2 = labels[1];
    }
  }
  return finish_decision(bl, b1, b2, book, c);
}

Precoder pair_precoder(const CMatrix& h_pair, PrecoderKind kind, double sigma2) {
  if (h_pair.cols() != 2) throw DimensionMismatchError("pair subchannel must have two columns");
  if (h_pair.rows() < 2) {
    throw ConfigError(ConfigError::Kind::Unsupported, "precoded STBC-SM needs n_r >= 2");
  }
  Eigen::HouseholderQR<CMatrix> qr(h_pair);
  const CMatrix r = qr.matrixQR().topRows(2).triangularView<Eigen::Upper>();
  return make_precoder(kind, r, sigma2);
}

namespace {

// Scaled 2x2 precoder per codeword, empty for unprecoded links.
std::vector<CMatrix> pair_precoders(const CMatrix& h_analog, const StbcsmCodebook& book, PrecoderKind kind,
                                    double n0) {
  std::vector<CMatrix> out;
  if (kind == PrecoderKind::Identity) return out;
  out.reserve(static_cast<std::size_t>(book.codeword_count()));
  CMatrix pair(h_analog.rows(), 2);
  for (const auto& d : book.descriptors()) {
    pair.col(0) = h_analog.col(d.first);
    pair.col(1) = h_analog.col(d.second);
    out.push_back(pair_precoder(pair, kind, n0).scaled());
  }
  return out;
}

std::vector<CMatrix> effective_from(const CMatrix& h_analog, const StbcsmCodebook& book,
                                    const std::vector<CMatrix>& precoders) {
  const double amplitude = 1.0 / std::sqrt(kStbcsmPowerNormalization);
  std::vector<CMatrix> out;
  out.reserve(static_cast<std::size_t>(book.codeword_count()));
  for (int l = 0; l < book.codeword_count(); ++l) {
    CMatrix e = equivalent_channel(h_analog, book.descriptor(l));
    if (!precoders.empty()) e = e * precoders[static_cast<std::size_t>(l)];
    out.push_back(amplitude * e);
  }
  return out;
}

}  // namespace

std::vector<CMatrix> stbcsm_effective_channels(const CMatrix& h, const StbcsmCodebook& book, const LinkSpec& link,
                                               double n0) {
  link.validate();
  if (h.cols() != book.n_t()) throw DimensionMismatchError("channel columns must equal codebook n_t");
  const CMatrix h_analog = link.analog_channel(h);
  return effective_from(h_analog, book, pair_precoders(h_analog, book, precoder_kind(link.variant), n0));
}

StbcsmTransmission stbcsm_transmit_receive(const StbcsmBlock& block, const CMatrix& h, const StbcsmCodebook& book,
                                           const LinkSpec& link, double n0, Rng& rng) {
  link.validate();
  if (h.cols() != book.n_t()) throw DimensionMismatchError("channel columns must equal codebook n_t");
  const CMatrix h_analog = link.analog_channel(h);
  const std::vector<CMatrix> precoders = pair_precoders(h_analog, book, precoder_kind(link.variant), n0);
  StbcsmTransmission out;
  out.equivalents = effective_from(h_analog, book, precoders);

  // Symbols actually radiated by the pair, after the optional precoder.
  Eigen::Vector2cd u(block.x1, block.x2);
  if (!precoders.empty()) u = precoders[static_cast<std::size_t>(block.codeword)] * u;
  const CMatrix x = codeword_matrix(book.descriptor(block.codeword), book.n_t(), u(0), u(1)) /
                    std::sqrt(kStbcsmPowerNormalization);

  const Eigen::Index n_r = h.rows();
  CVector slot1 = h_analog * x.row(0).transpose();
  CVector slot2 = h_analog * x.row(1).transpose();
  add_noise(slot1, n0, rng);
  add_noise(slot2, n0, rng);
  out.y.resize(2 * n_r);
  out.y.head(n_r) = slot1;
  out.y.tail(n_r) = slot2.conjugate();
  return out;
}

}  // namespace stbcsm
