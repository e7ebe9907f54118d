#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "jamopt/channel.hpp"

using namespace jamopt;

TEST_CASE("dbm_to_linear definition points") {
  CHECK(dbm_to_linear(0.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(dbm_to_linear(20.0) == doctest::Approx(100.0).epsilon(1e-12));
  CHECK(dbm_to_linear(30.0) == doctest::Approx(1000.0).epsilon(1e-12));
}

TEST_CASE("dbm_to_linear rejects non-finite input") {
  CHECK_THROWS_AS(dbm_to_linear(std::numeric_limits<double>::quiet_NaN()),
                  std::invalid_argument);
  CHECK_THROWS_AS(dbm_to_linear(std::numeric_limits<double>::infinity()),
                  std::invalid_argument);
}

TEST_CASE("sir_to_db values and sentinels") {
  CHECK(sir_to_db(1.0) == doctest::Approx(0.0));
  CHECK(sir_to_db(100.0) == doctest::Approx(20.0).epsilon(1e-12));
  // 10*log10 of the reference dual-hop relay SIR, checked against an
  // independent high-precision evaluation.
  CHECK(sir_to_db(4.4751381215469613) ==
        doctest::Approx(6.5080644400946524).epsilon(1e-12));
  CHECK(sir_to_db(0.0) == -std::numeric_limits<double>::infinity());
  CHECK_THROWS_AS(sir_to_db(-1e-9), std::invalid_argument);
  CHECK_THROWS_AS(sir_to_db(std::numeric_limits<double>::quiet_NaN()),
                  std::invalid_argument);
}

TEST_CASE("dbm and db conversions are mutual inverses") {
  for (double p = -100.0; p <= 100.0; p += 0.37) {
    const double back = sir_to_db(dbm_to_linear(p));
    CHECK(std::abs(back - p) <= 1e-12 * std::max(1.0, std::abs(p)));
  }
}

TEST_CASE("mu_factor matches the closed-form definition") {
  ChannelParams params;  // 2 GHz, 3/23 dB, exponent 2

  // Independently evaluated: 10^0.3 * (4*pi*2e9/299792458)^2.
  CHECK(mu_factor(params, PathKind::los) ==
        doctest::Approx(14022.915385929727).epsilon(1e-12));

  SUBCASE("all factors unity") {
    ChannelParams unity = params;
    unity.excess_los_db = 0.0;
    unity.carrier_frequency_hz =
        unity.light_speed_mps / (4.0 * 3.14159265358979323846);
    CHECK(mu_factor(unity, PathKind::los) ==
          doctest::Approx(1.0).epsilon(1e-14));
  }

  SUBCASE("nlos-to-los ratio is the excess-dB gap") {
    const double ratio =
        mu_factor(params, PathKind::nlos) / mu_factor(params, PathKind::los);
    CHECK(ratio == doctest::Approx(100.0).epsilon(1e-12));
  }
}

TEST_CASE("mu_factor is strictly increasing in excess dB and frequency") {
  ChannelParams params;
  double previous = 0.0;
  for (double db = -10.0; db <= 30.0; db += 2.5) {
    params.excess_los_db = db;
    const double mu = mu_factor(params, PathKind::los);
    CHECK(mu > previous);
    previous = mu;
  }
  params = ChannelParams{};
  previous = 0.0;
  for (double fc = 0.5e9; fc <= 6e9; fc += 0.25e9) {
    params.carrier_frequency_hz = fc;
    const double mu = mu_factor(params, PathKind::los);
    CHECK(mu > previous);
    previous = mu;
  }
}

TEST_CASE("reference channel ties eta to the los factor") {
  const ChannelParams params = reference_channel();
  CHECK(params.eta_nlos == mu_factor(params, PathKind::los));
  CHECK(params.path_loss_exponent == 2.0);
}
