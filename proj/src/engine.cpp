#include "stbcsm/engine.hpp"

#include <chrono>
#include <cmath>
#include <map>
#include <mutex>
#include <thread>

#include "stbcsm/channel.hpp"
#include "stbcsm/constellation.hpp"
#include "stbcsm/error.hpp"
#include "stbcsm/sm.hpp"
#include "stbcsm/stbc_sm.hpp"
#include "stbcsm/vblast.hpp"

namespace stbcsm {
namespace {

struct BatchResult {
  std::uint64_t bits = 0;
  std::uint64_t errors = 0;
  std::uint64_t redraws = 0;
};

std::uint64_t count_errors(BitSpan sent, BitSpan got) {
  std::uint64_t e = 0;
  for (std::size_t i = 0; i < sent.size(); ++i) e += (sent[i] != got[i]);
  return e;
}

// Draws channels and runs one block of the configured scheme end to end.
class BlockSimulator {
 public:
  BlockSimulator(const SimConfig& cfg, double theta)
      : cfg_(cfg), constellation_(Constellation::parse(cfg.modulation)), link_(cfg.link()),
        book_(cfg.scheme == Scheme::StbcSm ? StbcsmCodebook::build(cfg.n_t, theta) : StbcsmCodebook{}),
        h_(cfg.n_r, cfg.n_t) {
    bits_.resize(static_cast<std::size_t>(bits_per_block(cfg)));
    decoupled_ = !uses_precoder(cfg.variant);
  }

  BatchResult run_batch(std::uint64_t seed, double n0) {
    Rng rng(seed);
    BatchResult out;
    for (int b = 0; b < kBatchBlocks; ++b) {
      rng.fill_bits(bits_);
      out.errors += run_block(rng, n0, out.redraws);
      out.bits += bits_.size();
    }
    return out;
  }

 private:
  std::uint64_t run_block(Rng& rng, double n0, std::uint64_t& redraws) {
    for (;;) {
      draw_channel_into(h_, rng);
      try {
        switch (cfg_.scheme) {
          case Scheme::Sm: {
            const SmFrame frame = sm_map(bits_, cfg_.n_t, constellation_);
            const SmTransmission tx = sm_transmit_receive(frame, h_, link_, n0, rng);
            return count_errors(bits_, sm_ml_detect(tx.y, tx.h_eff, constellation_, cfg_.n_t).bits);
          }
          case Scheme::StbcSm: {
            const StbcsmBlock block = stbcsm_map(bits_, book_, constellation_);
            const StbcsmTransmission tx = stbcsm_transmit_receive(block, h_, book_, link_, n0, rng);
            const StbcsmDecision d = decoupled_
                                         ? stbcsm_ml_detect_decoupled(tx.y, tx.equivalents, book_, constellation_)
                                         : stbcsm_ml_detect(tx.y, tx.equivalents, book_, constellation_);
            return count_errors(bits_, d.bits);
          }
          case Scheme::Vblast: {
            const VblastFrame frame = vblast_map(bits_, cfg_.n_t, constellation_);
            CVector y = h_ * frame.x;
            add_noise(y, n0, rng);
            return count_errors(bits_, vblast_ml_detect(y, h_, constellation_, cfg_.n_t));
          }
        }
      } catch (const SingularChannelError&) {
        ++redraws;
        continue;
      }
      return 0;
    }
  }

  const SimConfig& cfg_;
  Constellation constellation_;
  LinkSpec link_;
  StbcsmCodebook book_;
  CMatrix h_;
  Bits bits_;
  bool decoupled_ = true;
};

}  // namespace

double BerRecord::ci95_half_width() const {
  if (bits == 0) return 0.0;
  return 1.96 * std::sqrt(ber * (1.0 - ber) / static_cast<double>(bits));
}

bool BerRecord::same_result(const BerRecord& o) const {
  return scheme == o.scheme && variant == o.variant && n_t == o.n_t && n_r == o.n_r && modulation == o.modulation &&
         elements == o.elements && theta == o.theta && snr_db == o.snr_db && bits == o.bits && errors == o.errors &&
         ber == o.ber && seed == o.seed && channel_redraws == o.channel_redraws;
}

std::uint64_t point_seed(std::uint64_t master_seed, std::size_t index) { return mix_seed(master_seed, index); }

double resolve_theta(const SimConfig& cfg) {
  if (cfg.scheme != Scheme::StbcSm) return 0.0;
  if (cfg.theta_override) return *cfg.theta_override;
  static std::mutex mu;
  static std::map<std::pair<int, std::string>, double> cache;
  const std::lock_guard lock(mu);
  const auto key = std::make_pair(cfg.n_t, cfg.modulation);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  const double theta = optimize_rotation_angle(cfg.n_t, Constellation::parse(cfg.modulation), kThetaGridStep).theta;
  cache.emplace(key, theta);
  return theta;
}

int bits_per_block(const SimConfig& cfg) {
  const Constellation c = Constellation::parse(cfg.modulation);
  switch (cfg.scheme) {
    case Scheme::Sm:
      return sm_bits_per_use(cfg.n_t, c);
    case Scheme::StbcSm:
      return ilog2(stbcsm_codeword_count(cfg.n_t)) + 2 * c.bits_per_symbol();
    case Scheme::Vblast:
      return cfg.n_t * c.bits_per_symbol();
  }
  return 0;
}

BerRecord run_point(const SimConfig& cfg, double snr_db, std::uint64_t stream_seed, int workers) {
  cfg.validate();
  if (workers < 1) throw ConfigError(ConfigError::Kind::InvalidValue, "workers must be >= 1");
  const auto start = std::chrono::steady_clock::now();
  const double theta = resolve_theta(cfg);
  const double n0 = noise_variance_from_snr(snr_db);

  std::vector<BlockSimulator> sims;
  sims.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) sims.emplace_back(cfg, theta);

  BerRecord rec;
  rec.scheme = cfg.scheme;
  rec.variant = cfg.variant;
  rec.n_t = cfg.n_t;
  rec.n_r = cfg.n_r;
  rec.modulation = cfg.modulation;
  rec.elements = cfg.elements;
  rec.theta = theta;
  rec.snr_db = snr_db;
  rec.seed = stream_seed;

  std::vector<BatchResult> round(static_cast<std::size_t>(workers));
  std::uint64_t next_batch = 0;
  bool done = false;
  while (!done) {
    if (workers == 1) {
      round[0] = sims[0].run_batch(mix_seed(stream_seed, next_batch), n0);
    } else {
      std::vector<std::jthread> pool;
      pool.reserve(static_cast<std::size_t>(workers));
      for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          const auto idx = static_cast<std::size_t>(w);
          round[idx] = sims[idx].run_batch(mix_seed(stream_seed, next_batch + idx), n0);
        });
      }
    }
    // Consume batches strictly in order; later batches of the round are
    // discarded once the stopping rule fires.
    for (const BatchResult& b : round) {
      rec.bits += b.bits;
      rec.errors += b.errors;
      rec.channel_redraws += b.redraws;
      if (rec.errors >= cfg.min_bit_errors || rec.bits >= cfg.max_bits) {
        done = true;
        break;
      }
    }
    next_batch += static_cast<std::uint64_t>(workers);
  }
  rec.ber = static_cast<double>(rec.errors) / static_cast<double>(rec.bits);
  rec.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

std::vector<BerRecord> run_sweep(const SimConfig& cfg, int workers) {
  cfg.validate();
  std::vector<BerRecord> out;
  out.reserve(cfg.snr_grid.size());
  for (std::size_t i = 0; i < cfg.snr_grid.size(); ++i) {
    out.push_back(run_point(cfg, cfg.snr_grid[i], point_seed(cfg.master_seed, i), workers));
    if (cfg.stop_ber > 0.0 && out.back().ber < cfg.stop_ber) break;
  }
  return out;
}

double snr_at_ber(std::span<const BerRecord> curve, double target_ber) {
  if (!(target_ber > 0.0)) throw Error("target BER must be positive");
  std::vector<const BerRecord*> pts;
  for (const auto& r : curve) {
    if (r.errors > 0 && r.ber > 0.0) pts.push_back(&r);
  }
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double b0 = pts[i]->ber;
    const double b1 = pts[i + 1]->ber;
    if (b0 >= target_ber && b1 <= target_ber && b0 > b1) {
      const double l0 = std::log10(b0);
      const double l1 = std::log10(b1);
      const double frac = (l0 - std::log10(target_ber)) / (l0 - l1);
      return pts[i]->snr_db + frac * (pts[i + 1]->snr_db - pts[i]->snr_db);
    }
    if (b0 == target_ber) return pts[i]->snr_db;
  }
  throw NotBracketedError("curve does not bracket BER " + std::to_string(target_ber));
}

double snr_gap_at_ber(std::span<const BerRecord> a, std::span<const BerRecord> b, double target_ber) {
  return snr_at_ber(a, target_ber) - snr_at_ber(b, target_ber);
}

}  // namespace stbcsm
