#include <doctest.h>

#include "stbcsm/channel.hpp"
#include "stbcsm/rng.hpp"

using namespace stbcsm;

TEST_SUITE("channel") {
  TEST_CASE("same seed gives the same matrix") {
    Rng a(99), b(99), c(100);
    const auto ha = draw_channel(4, 4, a).h;
    CHECK(ha == draw_channel(4, 4, b).h);
    CHECK(ha != draw_channel(4, 4, c).h);
  }

  TEST_CASE("entries are unit-variance circular gaussians") {
    Rng rng(5);
    double total = 0.0, re2 = 0.0, im2 = 0.0;
    cd mean{0.0, 0.0};
    const int draws = 62'500;  // 16 entries each: 10^6 samples
    for (int i = 0; i < draws; ++i) {
      const auto h = draw_channel(4, 4, rng).h;
      for (Eigen::Index k = 0; k < h.size(); ++k) {
        const cd v = h(k);
        total += std::norm(v);
        re2 += v.real() * v.real();
        im2 += v.imag() * v.imag();
        mean += v;
      }
    }
    const double n = draws * 16.0;
    CHECK(total / n == doctest::Approx(1.0).epsilon(0.01));
    CHECK(re2 / n == doctest::Approx(0.5).epsilon(0.01));
    CHECK(im2 / n == doctest::Approx(0.5).epsilon(0.01));
    CHECK(std::abs(mean / n) < 0.005);
  }

  TEST_CASE("snr to noise variance") {
    CHECK(noise_variance_from_snr(0.0) == doctest::Approx(1.0));
    CHECK(noise_variance_from_snr(10.0) == doctest::Approx(0.1));
    CHECK(std::abs(noise_variance_from_snr(3.0103) - 0.5) < 1e-6);
    CHECK(noise_variance_from_snr(10.0, 2.0) == doctest::Approx(0.2));
    CHECK(NoiseModel::from_snr_db(20.0).n0 == doctest::Approx(0.01));
  }

  TEST_CASE("noise statistics") {
    Rng rng(11);
    CHECK(draw_noise(8, 0.0, rng).isZero());
    const auto n = draw_noise(1'000'000, 2.0, rng);
    CHECK(n.squaredNorm() / n.size() == doctest::Approx(2.0).epsilon(0.01));
    Rng a(3), b(3);
    CHECK(draw_noise(16, 0.5, a) == draw_noise(16, 0.5, b));
  }

  TEST_CASE("bad dimensions") {
    Rng rng(1);
    CHECK_THROWS(draw_channel(0, 2, rng));
    CHECK_THROWS(draw_channel(2, 0, rng));
  }
}
