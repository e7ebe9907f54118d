#include <doctest.h>

#include <cmath>
#include <string>

#include "jamopt/experiments.hpp"

using namespace jamopt;

namespace {

bool csv_is_finite(const std::string& csv) {
  return csv.find("inf") == std::string::npos &&
         csv.find("nan") == std::string::npos;
}

}  // namespace

TEST_CASE("dual-hop sweep shape and per-row relations") {
  SweepSpec spec;
  const SweepResult result = run_dualhop_sweep(spec);
  REQUIRE(result.rows.size() == 17);
  CHECK(csv_is_finite(result.csv));

  for (const SweepRow& row : result.rows) {
    CHECK(row.chase.x == row.uav_x);
    CHECK(row.middle.x == 50.0);
    CHECK(row.random.x >= 0.0);
    CHECK(row.random.x <= 100.0);
    const double slack = 1.0 + 1e-12;
    CHECK(row.sir_opt <= row.chase.sir * slack);
    CHECK(row.sir_opt <= row.random.sir * slack);
    CHECK(row.sir_opt <= row.middle.sir * slack);
    for (const BaselineCell* cell : {&row.chase, &row.random, &row.middle}) {
      CHECK(cell->reduction_pct >= 0.0);
      CHECK(cell->reduction_pct <= 100.0);
    }
  }
}

TEST_CASE("sweep is deterministic and seed-sensitive") {
  SweepSpec spec;
  const SweepResult a = run_dualhop_sweep(spec);
  const SweepResult b = run_dualhop_sweep(spec);
  CHECK(a.csv == b.csv);

  spec.master_seed += 1;
  const SweepResult c = run_dualhop_sweep(spec);
  CHECK(a.csv != c.csv);  // the random baseline column must move
}

TEST_CASE("sweep rejects nonpositive steps") {
  SweepSpec spec;
  spec.step_m = 0.0;
  CHECK_THROWS_AS(run_dualhop_sweep(spec), std::invalid_argument);
}

TEST_CASE("realization sampling stays inside the spec intervals") {
  RealizationSpec spec;
  spec.n_uavs = 20;
  RngStream stream = RngStream::derive(spec.master_seed, 0);
  const Scenario s = sample_realization(spec, stream);
  REQUIRE(s.uavs.size() == 20);
  CHECK(s.distance_m == 5000.0);
  double previous = -1.0;
  for (const UavRelay& u : s.uavs) {
    CHECK(u.x_m >= 0.0);
    CHECK(u.x_m <= 5000.0);
    CHECK(u.h_m >= 45.0);
    CHECK(u.h_m <= 65.0);
    CHECK(u.y_m >= -10.0);
    CHECK(u.y_m <= 10.0);
    CHECK(u.power_dbm >= 20.0);
    CHECK(u.power_dbm <= 25.0);
    CHECK(u.x_m >= previous);  // sorted into chain order
    previous = u.x_m;
  }

  // Exactly 4 draws per relay.
  RngStream counter = RngStream::derive(spec.master_seed, 0);
  for (int i = 0; i < 4 * spec.n_uavs; ++i) {
    counter.next_u64();
  }
  CHECK(stream.next_u64() == counter.next_u64());
}

TEST_CASE("realization runs are deterministic under any thread count") {
  RealizationSpec spec;
  spec.n_uavs = 20;
  spec.count = 20;
  spec.master_seed = 12345;

  const RealizationResult serial = run_multihop_realizations(spec, 1);
  const RealizationResult serial_again = run_multihop_realizations(spec, 1);
  const RealizationResult parallel = run_multihop_realizations(spec, 4);
  CHECK(serial.csv == serial_again.csv);
  CHECK(serial.csv == parallel.csv);
  CHECK(serial.summary_text == parallel.summary_text);
  REQUIRE(serial.rows.size() == 20);
  CHECK(csv_is_finite(serial.csv));
}

TEST_CASE("realization rows dominate the baselines and summarize exactly") {
  RealizationSpec spec;
  spec.n_uavs = 6;
  spec.count = 30;
  spec.master_seed = 7;
  const RealizationResult result = run_multihop_realizations(spec, 2);

  double sum_chase = 0.0;
  double sum_random = 0.0;
  double sum_middle = 0.0;
  for (const RealizationRow& row : result.rows) {
    const double slack = 1.0 + 1e-12;
    CHECK(row.sir_opt <= row.chase.sir * slack);
    CHECK(row.sir_opt <= row.random.sir * slack);
    CHECK(row.sir_opt <= row.middle.sir * slack);
    CHECK(row.chase_uav >= 1);
    CHECK(row.chase_uav <= spec.n_uavs);
    sum_chase += row.chase.reduction_pct;
    sum_random += row.random.reduction_pct;
    sum_middle += row.middle.reduction_pct;
  }
  const double n = static_cast<double>(result.rows.size());
  CHECK(std::abs(result.summary.mean_reduction_chase_pct - sum_chase / n) <=
        1e-9);
  CHECK(std::abs(result.summary.mean_reduction_random_pct - sum_random / n) <=
        1e-9);
  CHECK(std::abs(result.summary.mean_reduction_middle_pct - sum_middle / n) <=
        1e-9);
  CHECK(result.summary.mean_reduction_chase_pct > 0.0);
  CHECK(result.summary.mean_reduction_random_pct > 0.0);
  CHECK(result.summary.mean_reduction_middle_pct > 0.0);
}

TEST_CASE("chase column points at the drawn relay") {
  RealizationSpec spec;
  spec.n_uavs = 5;
  spec.count = 8;
  const RealizationResult result = run_multihop_realizations(spec, 1);
  for (const RealizationRow& row : result.rows) {
    RngStream stream(row.seed);
    const Scenario s = sample_realization(spec, stream);
    CHECK(row.chase.x ==
          s.uavs[static_cast<std::size_t>(row.chase_uav - 1)].x_m);
  }
}
