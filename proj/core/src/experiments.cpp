#include "jamopt/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <thread>

#include "jamopt/baselines.hpp"
#include "jamopt/solver.hpp"

namespace jamopt {
namespace {

std::string format_double(double value, const char* format) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), format, value);
  return buffer;
}

std::string fmt_position(double v) { return format_double(v, "%.10g"); }
std::string fmt_db(double v) { return format_double(v, "%.6g"); }
std::string fmt_pct(double v) { return format_double(v, "%.6g"); }

double reduction_pct(double baseline_sir, double opt_sir) {
  const double red = 100.0 * (baseline_sir - opt_sir) / baseline_sir;
  // Absorb rounding dust when the solver lands exactly on the baseline.
  return red < 0.0 && red > -1e-9 ? 0.0 : red;
}

BaselineCell make_cell(const BaselinePoint& point, double opt_sir) {
  return {point.x, point.sir, sir_to_db(point.sir),
          reduction_pct(point.sir, opt_sir)};
}

void append_cell(std::string& line, const BaselineCell& cell) {
  line += ',';
  line += fmt_position(cell.x);
  line += ',';
  line += fmt_db(cell.sir_db);
  line += ',';
  line += fmt_pct(cell.reduction_pct);
}

constexpr char kSweepHeader[] =
    "uav_x,x_opt,sir_opt_db,"
    "chase_x,chase_sir_db,chase_reduction_pct,"
    "random_x,random_sir_db,random_reduction_pct,"
    "middle_x,middle_sir_db,middle_reduction_pct\n";

constexpr char kRealizationHeader[] =
    "realization,seed,n_uavs,x_opt,sir_opt_db,chase_uav,"
    "chase_x,chase_sir_db,chase_reduction_pct,"
    "random_x,random_sir_db,random_reduction_pct,"
    "middle_x,middle_sir_db,middle_reduction_pct\n";

}  // namespace

SweepResult run_dualhop_sweep(const SweepSpec& spec) {
  if (!(spec.step_m > 0.0)) {
    throw std::invalid_argument("run_dualhop_sweep: step must be > 0");
  }
  const int points = static_cast<int>(std::floor(
                         (spec.x_end_m - spec.x_start_m) / spec.step_m +
                         1e-9)) +
                     1;

  SweepResult result;
  result.rows.reserve(static_cast<std::size_t>(points));
  result.csv = kSweepHeader;

  SolveOptions options;
  options.include_endpoints = !spec.strict_paper;

  for (int i = 0; i < points; ++i) {
    const double uav_x = spec.x_start_m + spec.step_m * i;
    Scenario scenario = dualhop_reference_scenario(uav_x);
    scenario.y_msi_m = spec.y_msi_m;

    const PlacementResult opt =
        solve(scenario, Axis::x, scenario.y_msi_m, options);

    SweepRow row;
    row.uav_x = uav_x;
    row.x_opt = opt.x_opt;
    row.sir_opt = opt.sir_max_opt;
    row.sir_opt_db = opt.sir_max_opt_db;
    row.chase = make_cell(baseline_chase(scenario, 1), opt.sir_max_opt);
    RngStream stream = RngStream::derive(spec.master_seed,
                                         static_cast<std::uint64_t>(i));
    row.random = make_cell(baseline_random(scenario, stream), opt.sir_max_opt);
    row.middle = make_cell(baseline_middle(scenario), opt.sir_max_opt);

    std::string line = fmt_position(row.uav_x);
    line += ',';
    line += fmt_position(row.x_opt);
    line += ',';
    line += fmt_db(row.sir_opt_db);
    append_cell(line, row.chase);
    append_cell(line, row.random);
    append_cell(line, row.middle);
    line += '\n';
    result.csv += line;
    result.rows.push_back(row);
  }
  return result;
}

Scenario sample_realization(const RealizationSpec& spec, RngStream& stream) {
  if (spec.n_uavs < 1) {
    throw std::invalid_argument("sample_realization: n_uavs must be >= 1");
  }
  Scenario scenario;
  scenario.distance_m = spec.distance_m;
  scenario.tr1_power_dbm = 30.0;
  scenario.tr2_power_dbm = 20.0;
  scenario.msi_power_dbm = 20.0;
  scenario.y_msi_m = spec.y_msi_m;
  scenario.jam_lower_m = -spec.distance_m;
  scenario.jam_upper_m = 2.0 * spec.distance_m;
  scenario.channel = reference_channel();

  scenario.uavs.reserve(static_cast<std::size_t>(spec.n_uavs));
  for (int i = 0; i < spec.n_uavs; ++i) {
    UavRelay uav;
    uav.x_m = stream.next_uniform(spec.x_min_m, spec.x_max_m);
    uav.y_m = stream.next_uniform(spec.y_min_m, spec.y_max_m);
    uav.h_m = stream.next_uniform(spec.h_min_m, spec.h_max_m);
    uav.power_dbm = stream.next_uniform(spec.power_min_dbm,
                                        spec.power_max_dbm);
    scenario.uavs.push_back(uav);
  }
  // Chain order follows the link direction.
  std::sort(scenario.uavs.begin(), scenario.uavs.end(),
            [](const UavRelay& a, const UavRelay& b) { return a.x_m < b.x_m; });
  return scenario;
}

namespace {

RealizationRow compute_realization(const RealizationSpec& spec, int index) {
  const std::uint64_t seed =
      RngStream::derive_seed(spec.master_seed, static_cast<std::uint64_t>(index));
  RngStream stream(seed);

  const Scenario scenario = sample_realization(spec, stream);
  const int n = static_cast<int>(scenario.uavs.size());
  const int chase_uav =
      std::min(n, 1 + static_cast<int>(stream.next_unit() * n));

  SolveOptions options;
  options.include_endpoints = !spec.strict_paper;
  const PlacementResult opt =
      solve(scenario, Axis::x, scenario.y_msi_m, options);

  RealizationRow row;
  row.realization = index;
  row.seed = seed;
  row.n_uavs = n;
  row.x_opt = opt.x_opt;
  row.sir_opt = opt.sir_max_opt;
  row.sir_opt_db = opt.sir_max_opt_db;
  row.chase_uav = chase_uav;
  row.chase = make_cell(baseline_chase(scenario, chase_uav), opt.sir_max_opt);
  row.random = make_cell(baseline_random(scenario, stream), opt.sir_max_opt);
  row.middle = make_cell(baseline_middle(scenario), opt.sir_max_opt);
  return row;
}

}  // namespace

RealizationResult run_multihop_realizations(const RealizationSpec& spec,
                                            int n_threads) {
  if (spec.count < 0) {
    throw std::invalid_argument("run_multihop_realizations: count must be >= 0");
  }

  RealizationResult result;
  result.rows.resize(static_cast<std::size_t>(spec.count));

  const int workers =
      std::max(1, std::min(n_threads, spec.count > 0 ? spec.count : 1));
  if (workers == 1) {
    for (int i = 0; i < spec.count; ++i) {
      result.rows[static_cast<std::size_t>(i)] = compute_realization(spec, i);
    }
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t) {
      pool.emplace_back([&] {
        for (int i = next.fetch_add(1); i < spec.count;
             i = next.fetch_add(1)) {
          result.rows[static_cast<std::size_t>(i)] =
              compute_realization(spec, i);
        }
      });
    }
    for (std::thread& worker : pool) {
      worker.join();
    }
  }

  result.csv = kRealizationHeader;
  double sum_chase = 0.0;
  double sum_random = 0.0;
  double sum_middle = 0.0;
  for (const RealizationRow& row : result.rows) {
    std::string line = std::to_string(row.realization);
    line += ',';
    line += std::to_string(row.seed);
    line += ',';
    line += std::to_string(row.n_uavs);
    line += ',';
    line += fmt_position(row.x_opt);
    line += ',';
    line += fmt_db(row.sir_opt_db);
    line += ',';
    line += std::to_string(row.chase_uav);
    append_cell(line, row.chase);
    append_cell(line, row.random);
    append_cell(line, row.middle);
    line += '\n';
    result.csv += line;

    sum_chase += row.chase.reduction_pct;
    sum_random += row.random.reduction_pct;
    sum_middle += row.middle.reduction_pct;
  }

  if (spec.count > 0) {
    result.summary.mean_reduction_chase_pct = sum_chase / spec.count;
    result.summary.mean_reduction_random_pct = sum_random / spec.count;
    result.summary.mean_reduction_middle_pct = sum_middle / spec.count;
  }
  result.summary_text = "baseline,mean_reduction_pct\n";
  result.summary_text +=
      "chase," + fmt_pct(result.summary.mean_reduction_chase_pct) + "\n";
  result.summary_text +=
      "random," + fmt_pct(result.summary.mean_reduction_random_pct) + "\n";
  result.summary_text +=
      "middle," + fmt_pct(result.summary.mean_reduction_middle_pct) + "\n";
  return result;
}

}  // namespace jamopt
