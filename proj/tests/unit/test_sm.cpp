#include <doctest.h>

#include "../support/oracles.hpp"
#include "stbcsm/beamforming.hpp"
#include "stbcsm/channel.hpp"
#include "stbcsm/constellation.hpp"
#include "stbcsm/error.hpp"
#include "stbcsm/link.hpp"
#include "stbcsm/precoding.hpp"
#include "stbcsm/rng.hpp"
#include "stbcsm/sm.hpp"

using namespace stbcsm;

namespace {

std::vector<cd> point_list(const Constellation& c) { return {c.points().begin(), c.points().end()}; }

}  // namespace

TEST_SUITE("sm") {
  TEST_CASE("mapping examples") {
    const auto bpsk = Constellation::parse("BPSK");
    const Bits b00{0, 0}, b11{1, 1};
    const SmFrame f0 = sm_map(b00, 2, bpsk);
    CHECK(f0.antenna == 0);
    CHECK(f0.x(0) == cd(1.0, 0.0));
    CHECK(f0.x(1) == cd(0.0, 0.0));
    const SmFrame f1 = sm_map(b11, 2, bpsk);
    CHECK(f1.antenna == 1);
    CHECK(f1.x(0) == cd(0.0, 0.0));
    CHECK(f1.x(1) == cd(-1.0, 0.0));
    const auto qpsk = Constellation::parse("QPSK");
    CHECK(sm_bits_per_use(4, qpsk) == 4);
    CHECK(sm_bits_per_use(2, bpsk) == 2);
    CHECK_THROWS_AS(sm_map(Bits{0, 1, 0}, 4, qpsk), LengthMismatchError);
  }

  TEST_CASE("one-hot structure for all inputs") {
    const auto qpsk = Constellation::parse("QPSK");
    for (std::uint32_t v = 0; v < 16; ++v) {
      Bits b(4);
      uint_to_bits(v, 4, b.data());
      const SmFrame f = sm_map(b, 4, qpsk);
      CHECK(f.antenna == static_cast<int>(v >> 2));
      int nonzero = 0;
      for (Eigen::Index k = 0; k < 4; ++k) nonzero += f.x(k) != cd(0.0, 0.0);
      CHECK(nonzero == 1);
      CHECK(f.x(f.antenna) == f.symbol);
    }
  }

  TEST_CASE("noiseless detection") {
    Rng rng(1);
    const auto c = Constellation::parse("QPSK");
    const CMatrix h = draw_channel(4, 4, rng).h;
    const CVector y = h.col(2) * c.point(3);
    const SmDecision d = sm_ml_detect(y, h, c, 4);
    CHECK(d.antenna == 2);
    CHECK(d.symbol_label == 3);
    CHECK(d.bits == Bits{1, 0, 1, 1});
  }

  TEST_CASE("ties resolve to the lowest hypothesis") {
    const auto c = Constellation::parse("BPSK");
    const SmDecision d = sm_ml_detect(CVector::Zero(2), CMatrix::Identity(2, 2), c, 2);
    CHECK(d.antenna == 0);
    CHECK(d.symbol_label == 0);
  }

  TEST_CASE("exhaustive detector matches the oracle on noisy trials") {
    for (const char* mod : {"BPSK", "QPSK", "16QAM"}) {
      const auto c = Constellation::parse(mod);
      const auto pts = point_list(c);
      for (Variant v : {Variant::Plain, Variant::PrecodedZf, Variant::PrecodedMmse, Variant::Abf, Variant::HbfZf}) {
        CAPTURE(mod);
        CAPTURE(to_string(v));
        const LinkSpec link = LinkSpec::make(v, uses_array(v) ? 3 : 1);
        Rng rng(42);
        const int n_t = 4;
        Bits bits(static_cast<std::size_t>(sm_bits_per_use(n_t, c)));
        for (int trial = 0; trial < 1000; ++trial) {
          rng.fill_bits(bits);
          const CMatrix h = draw_channel(4, n_t, rng).h;
          const SmTransmission tx = sm_transmit_receive(sm_map(bits, n_t, c), h, link, 0.5, rng);
          const SmDecision got = sm_ml_detect(tx.y, tx.h_eff, c, n_t);
          const auto want = oracle::sm_search(tx.y, tx.h_eff, pts, n_t);
          REQUIRE(got.antenna == want.first);
          REQUIRE(got.symbol_label == want.second);
        }
      }
    }
  }

  TEST_CASE("effective channels per variant") {
    Rng rng(7);
    const CMatrix h = draw_channel(4, 2, rng).h;
    CHECK(sm_effective_channel(h, LinkSpec::plain(), 0.1) == h);
    CHECK((sm_effective_channel(h, LinkSpec::make(Variant::Abf, 3), 0.1) - 3.0 * h).norm() < 1e-12);
    const Precoder zf = zf_precoder(h);
    const CMatrix want = (h * zf.scaled()).leftCols(2);
    CHECK((sm_effective_channel(h, LinkSpec::make(Variant::PrecodedZf, 1), 0.1) - want).norm() < 1e-12);
    const CMatrix hl = apply_abf(h, ArrayConfig::with_elements(2));
    const CMatrix want_hbf = (hl * mmse_precoder(hl, 0.1).scaled()).leftCols(2);
    CHECK((sm_effective_channel(h, LinkSpec::make(Variant::HbfMmse, 2), 0.1) - want_hbf).norm() < 1e-12);
  }

  TEST_CASE("noiseless round trip for every variant") {
    const auto c = Constellation::parse("BPSK");
    Rng rng(3);
    for (Variant v : {Variant::Plain, Variant::PrecodedZf, Variant::PrecodedMmse, Variant::Abf, Variant::HbfZf,
                      Variant::HbfMmse}) {
      const LinkSpec link = LinkSpec::make(v, uses_array(v) ? 2 : 1);
      for (std::uint32_t val = 0; val < 4; ++val) {
        Bits b(2);
        uint_to_bits(val, 2, b.data());
        const CMatrix h = draw_channel(4, 2, rng).h;
        const SmTransmission tx = sm_transmit_receive(sm_map(b, 2, c), h, link, 0.0, rng);
        CHECK(sm_ml_detect(tx.y, tx.h_eff, c, 2).bits == b);
      }
    }
  }

  TEST_CASE("missing or unexpected array is a config error") {
    LinkSpec bad{Variant::Abf, std::nullopt};
    Rng rng(1);
    const CMatrix h = draw_channel(4, 2, rng).h;
    CHECK_THROWS_AS(sm_effective_channel(h, bad, 0.1), ConfigError);
    LinkSpec extra{Variant::Plain, ArrayConfig::with_elements(2)};
    CHECK_THROWS_AS(sm_effective_channel(h, extra, 0.1), ConfigError);
  }
}
