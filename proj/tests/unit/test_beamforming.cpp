#include <doctest.h>

#include <cmath>
#include <numbers>

#include "stbcsm/beamforming.hpp"
#include "stbcsm/channel.hpp"
#include "stbcsm/error.hpp"
#include "stbcsm/rng.hpp"

using namespace stbcsm;

TEST_SUITE("beamforming") {
  TEST_CASE("steering examples") {
    const auto w1 = steering_weights(ArrayConfig::with_elements(1));
    CHECK(w1.size() == 1);
    CHECK(w1(0) == cd(1.0, 0.0));
    const auto w6 = steering_weights(ArrayConfig::with_elements(6));
    for (Eigen::Index k = 0; k < 6; ++k) CHECK(std::abs(w6(k) - cd(1.0, 0.0)) < 1e-15);
    ArrayConfig cfg = ArrayConfig::with_elements(2);
    cfg.aod_rad = std::numbers::pi / 6;
    const auto w = steering_weights(cfg);
    CHECK(std::abs(w(0) - cd(1.0, 0.0)) < 1e-12);
    CHECK(std::abs(w(1) - cd(0.0, -1.0)) < 1e-12);
  }

  TEST_CASE("weights have unit modulus") {
    ArrayConfig cfg = ArrayConfig::with_elements(8);
    cfg.aod_rad = 0.7;
    const auto w = steering_weights(cfg);
    CHECK(w(0) == cd(1.0, 0.0));
    for (Eigen::Index k = 0; k < w.size(); ++k) CHECK(std::abs(std::abs(w(k)) - 1.0) < 1e-12);
  }

  TEST_CASE("beam pattern peaks only at the steered angle") {
    for (double aod : {0.0, 0.4, -1.0}) {
      ArrayConfig cfg = ArrayConfig::with_elements(4);
      cfg.aod_rad = aod;
      CHECK(std::abs(beam_response(cfg, aod)) == doctest::Approx(4.0).epsilon(1e-12));
      for (int i = -157; i <= 157; ++i) {
        const double angle = i * 0.01;
        const double g = std::abs(beam_response(cfg, angle));
        CHECK(g <= 4.0 + 1e-12);
        if (std::abs(angle - aod) > 1e-3) CHECK(g < 4.0 - 1e-9);
      }
    }
  }

  TEST_CASE("gain law") {
    CHECK(array_gain_factor(3) == 3.0);
    CHECK(array_gain_db(1) == 0.0);
    CHECK(array_gain_db(2) == doctest::Approx(6.0206).epsilon(1e-4));
    CHECK(array_gain_db(3) == doctest::Approx(9.5424).epsilon(1e-4));
    CHECK(array_gain_db(4) == doctest::Approx(12.0412).epsilon(1e-4));
    for (int l = 2; l <= 16; ++l) {
      CHECK(std::abs(incremental_gain_db(l) - 20.0 * std::log10(double(l) / (l - 1))) < 1e-12);
      CHECK(std::abs(array_gain_db(l) - array_gain_db(l - 1) - incremental_gain_db(l)) < 1e-12);
    }
    CHECK(incremental_gain_db(4) == doctest::Approx(2.4988).epsilon(1e-4));
    CHECK_THROWS(incremental_gain_db(1));
  }

  TEST_CASE("abf scales the channel by L") {
    Rng rng(2);
    const CMatrix h = draw_channel(4, 2, rng).h;
    CHECK(apply_abf(h, ArrayConfig::with_elements(1)) == h);
    CHECK((apply_abf(h, ArrayConfig::with_elements(4)) - 4.0 * h).norm() < 1e-15);
  }

  TEST_CASE("invalid arrays") {
    ArrayConfig cfg;
    cfg.elements = 0;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg = ArrayConfig{};
    cfg.spacing = 0.0;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg = ArrayConfig{};
    cfg.aod_rad = 2.0;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
  }
}
