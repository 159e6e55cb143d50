#include <doctest.h>

#include <cmath>

#include "../support/oracles.hpp"
#include "stbcsm/channel.hpp"
#include "stbcsm/constellation.hpp"
#include "stbcsm/error.hpp"
#include "stbcsm/rng.hpp"
#include "stbcsm/vblast.hpp"

using namespace stbcsm;

TEST_SUITE("vblast") {
  TEST_CASE("mapping examples") {
    const auto c = Constellation::parse("BPSK");
    const auto f = vblast_map(Bits{0, 1}, 2, c);
    CHECK(std::abs(f.x(0) - cd(1.0 / std::sqrt(2.0), 0.0)) < 1e-15);
    CHECK(std::abs(f.x(1) - cd(-1.0 / std::sqrt(2.0), 0.0)) < 1e-15);
    const auto g = vblast_map(Bits{0, 0, 0, 0}, 4, c);
    for (Eigen::Index k = 0; k < 4; ++k) CHECK(std::abs(g.x(k) - cd(0.5, 0.0)) < 1e-15);
    CHECK_THROWS_AS(vblast_map(Bits{0, 0, 0}, 2, c), LengthMismatchError);
    const auto q = Constellation::parse("QPSK");
    const auto fq = vblast_map(Bits{0, 1, 1, 0}, 2, q);
    CHECK(fq.labels == std::vector<int>{1, 2});
    CHECK(fq.x.squaredNorm() == doctest::Approx(1.0));
  }

  TEST_CASE("noiseless round trip for all inputs") {
    const auto c = Constellation::parse("BPSK");
    Rng rng(5);
    for (int n_t = 1; n_t <= 4; ++n_t) {
      for (std::uint32_t v = 0; v < (1u << n_t); ++v) {
        Bits b(static_cast<std::size_t>(n_t));
        uint_to_bits(v, n_t, b.data());
        const CMatrix h = draw_channel(4, n_t, rng).h;
        const CVector y = h * vblast_map(b, n_t, c).x;
        CHECK(vblast_ml_detect(y, h, c, n_t) == b);
      }
    }
  }

  TEST_CASE("matches the odometer brute force") {
    for (const char* mod : {"BPSK", "QPSK"}) {
      const auto c = Constellation::parse(mod);
      const std::vector<cd> pts(c.points().begin(), c.points().end());
      const int n_t = 3;
      Rng rng(31);
      Bits bits(static_cast<std::size_t>(n_t * c.bits_per_symbol()));
      for (int t = 0; t < 1000; ++t) {
        rng.fill_bits(bits);
        const CMatrix h = draw_channel(4, n_t, rng).h;
        CVector y = h * vblast_map(bits, n_t, c).x;
        add_noise(y, 0.3, rng);
        const Bits got = vblast_ml_detect(y, h, c, n_t);
        const auto want = oracle::vblast_search(y, h, pts, 1.0 / std::sqrt(double(n_t)));
        Bits want_bits;
        for (int l : want) {
          const Bits lb = c.label_bits(l);
          want_bits.insert(want_bits.end(), lb.begin(), lb.end());
        }
        REQUIRE(got == want_bits);
      }
    }
  }

  TEST_CASE("hypothesis guard") {
    CHECK_NOTHROW(check_vblast_size(10, Constellation::parse("QPSK")));
    CHECK_THROWS_AS(check_vblast_size(6, Constellation::parse("16QAM")), ConfigError);
  }
}
