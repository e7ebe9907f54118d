#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "jamopt/baselines.hpp"
#include "jamopt/oracle.hpp"
#include "jamopt/solver.hpp"
#include "test_support.hpp"

using namespace jamopt;
using testsupport::random_scenario;

TEST_CASE("grid_min on a single shared vertex") {
  CurveSet curves;
  curves.link1 = {{1.0, 50.0, 1.0}};
  curves.link2 = {{1.0, 50.0, 1.0}};
  const OracleResult result = grid_min(curves, 0.0, 100.0, 1001, 3);
  CHECK(result.x == doctest::Approx(50.0).epsilon(1e-12));
  CHECK(result.value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(result.refined);
}

TEST_CASE("grid_min on a degenerate interval") {
  CurveSet curves;
  curves.link1 = {{2.0, 10.0, 3.0}};
  curves.link2 = {{2.0, 10.0, 3.0}};
  const OracleResult result = grid_min(curves, 7.0, 7.0, 10001, 6);
  CHECK(result.x == 7.0);
  CHECK(result.value == evaluate_sir_max(curves, 7.0));
}

TEST_CASE("refinement never loses to the coarse pass") {
  RngStream rng(67);
  for (int i = 0; i < 20; ++i) {
    const Scenario s = random_scenario(rng, 1 + i % 5);
    const CurveSet curves = build_curves(s, Axis::x, s.y_msi_m);
    double previous = std::numeric_limits<double>::infinity();
    for (int refines = 0; refines <= 6; ++refines) {
      const OracleResult result =
          grid_min(curves, s.jam_lower_m, s.jam_upper_m, 2001, refines);
      CHECK(result.value <= previous);
      previous = result.value;
    }
  }
}

TEST_CASE("oracle and solver agree on the reference preset") {
  const Scenario s = dualhop_reference_scenario(50.0);
  const PlacementResult opt = solve(s);
  const OracleResult oracle = grid_oracle(s);
  CHECK(std::abs(opt.sir_max_opt - oracle.value) <=
        1e-6 * std::max(opt.sir_max_opt, 1e-300));
}

TEST_CASE("chase baseline sits under the requested relay") {
  const Scenario dual = dualhop_reference_scenario(35.0);
  CHECK(baseline_chase(dual, 1).x == 35.0);
  CHECK_THROWS_AS(baseline_chase(dual, 0), std::out_of_range);
  CHECK_THROWS_AS(baseline_chase(dual, 2), std::out_of_range);

  RngStream rng(71);
  const Scenario multi = random_scenario(rng, 20);
  const int index = 1 + static_cast<int>(rng.next_unit() * 20.0);
  CHECK(baseline_chase(multi, index).x == multi.uavs[index - 1].x_m);
}

TEST_CASE("random baseline is reproducible and consumes one draw") {
  const Scenario s = dualhop_reference_scenario(35.0);

  RngStream a(99);
  RngStream b(99);
  const BaselinePoint first = baseline_random(s, a);
  const BaselinePoint second = baseline_random(s, b);
  CHECK(first.x == second.x);
  CHECK(first.sir == second.sir);
  CHECK(first.x >= 0.0);
  CHECK(first.x <= s.distance_m);

  // After one baseline draw both streams must be in the same position.
  RngStream reference(99);
  reference.next_u64();
  CHECK(a.next_u64() == reference.next_u64());
}

TEST_CASE("middle baseline") {
  const Scenario s = dualhop_reference_scenario(50.0);
  const BaselinePoint middle = baseline_middle(s);
  CHECK(middle.x == 50.0);
  // With the relay centered, chasing and middle coincide.
  CHECK(middle.x == baseline_chase(s, 1).x);
  CHECK(middle.sir == baseline_chase(s, 1).sir);
}

TEST_CASE("no baseline beats the solver") {
  RngStream rng(73);
  for (int i = 0; i < 40; ++i) {
    const Scenario s = random_scenario(rng, 1 + i % 6);
    const PlacementResult opt = solve(s);
    const double slack = 1.0 + 1e-12;
    for (int index = 1; index <= static_cast<int>(s.uavs.size()); ++index) {
      CHECK(opt.sir_max_opt <= baseline_chase(s, index).sir * slack);
    }
    CHECK(opt.sir_max_opt <= baseline_random(s, rng).sir * slack);
    CHECK(opt.sir_max_opt <= baseline_middle(s).sir * slack);
  }
}
