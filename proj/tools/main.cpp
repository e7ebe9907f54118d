// Command-line front end: scenario solving, the bundled experiment
// reproductions, and the brute-force verification oracle.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "jamopt/experiments.hpp"
#include "jamopt/oracle.hpp"
#include "jamopt/scenario_io.hpp"
#include "jamopt/solver.hpp"

namespace {

using nlohmann::json;

constexpr int kExitBadScenario = 2;

std::string origin_label(const jamopt::CandidateOrigin& origin) {
  using namespace jamopt;
  if (const auto* v = std::get_if<VertexOrigin>(&origin)) {
    return "vertex(" + std::to_string(v->curve) + ")";
  }
  if (const auto* w = std::get_if<WithinLinkOrigin>(&origin)) {
    return "within-link(" + std::to_string(w->curve_a) + "," +
           std::to_string(w->curve_b) +
           (w->sign == RootSign::minus ? ",-)" : ",+)");
  }
  if (const auto* c = std::get_if<CrossLinkOrigin>(&origin)) {
    return "cross-link(" + std::to_string(c->curve_link1) + "," +
           std::to_string(c->curve_link2) +
           (c->sign == RootSign::minus ? ",-)" : ",+)");
  }
  const auto& endpoint = std::get<jamopt::EndpointOrigin>(origin);
  return endpoint.side == jamopt::BoundSide::lower ? "endpoint(lower)"
                                                   : "endpoint(upper)";
}

void print_warnings(const jamopt::Scenario& scenario) {
  for (const jamopt::ValidationIssue& issue : jamopt::validate(scenario)) {
    if (issue.severity == jamopt::Severity::warning) {
      std::cerr << "warning: [" << issue.code << "] " << issue.message
                << "\n";
    }
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write to '" + path + "'");
  }
  out << text;
}

int worker_threads() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

struct SolveArgs {
  std::string scenario_path;
  double y_msi = 0.0;
  bool y_msi_set = false;
  double x_msi = 0.0;
  std::string axis = "x";
  int alternating_rounds = 1;
  bool strict_paper = false;
  bool verify = false;
  std::string output_path;
};

int run_solve(const SolveArgs& args) {
  jamopt::Scenario scenario = jamopt::load_scenario(args.scenario_path);
  if (args.y_msi_set) {
    scenario.y_msi_m = args.y_msi;
  }
  if (auto issues = jamopt::validate(scenario); jamopt::has_errors(issues)) {
    throw jamopt::ScenarioError(std::move(issues));
  }
  print_warnings(scenario);

  jamopt::SolveOptions options;
  options.include_endpoints = !args.strict_paper;

  json report;
  if (args.alternating_rounds > 1) {
    jamopt::AlternatingOptions alternating;
    alternating.max_rounds = args.alternating_rounds;
    alternating.solve = options;
    const jamopt::AlternatingResult result =
        jamopt::solve_alternating(scenario, scenario.y_msi_m, alternating);
    std::printf("x_opt_m: %.10g\n", result.x);
    std::printf("y_opt_m: %.10g\n", result.y);
    std::printf("sir_max_linear: %.10g\n", result.sir);
    std::printf("sir_max_db: %.6g\n", result.sir_db);
    std::printf("rounds_used: %d\n", result.rounds_used);
    report = {{"x_opt_m", result.x},
              {"y_opt_m", result.y},
              {"sir_max_linear", result.sir},
              {"sir_max_db", result.sir_db},
              {"rounds_used", result.rounds_used}};
  } else {
    const jamopt::Axis axis =
        args.axis == "y" ? jamopt::Axis::y : jamopt::Axis::x;
    const double fixed =
        axis == jamopt::Axis::x ? scenario.y_msi_m : args.x_msi;
    const jamopt::PlacementResult result =
        jamopt::solve(scenario, axis, fixed, options);
    std::printf("axis: %s\n", args.axis.c_str());
    std::printf("x_opt_m: %.10g\n", result.x_opt);
    std::printf("sir_max_linear: %.10g\n", result.sir_max_opt);
    std::printf("sir_max_db: %.6g\n", result.sir_max_opt_db);
    std::printf("candidates_total: %d\n", result.candidates_total);
    std::printf("candidates_feasible: %d\n", result.candidates_feasible);

    json feasible = json::array();
    for (const jamopt::CandidatePoint& candidate : result.feasible_list) {
      feasible.push_back({{"x_m", candidate.x},
                          {"sir_linear", candidate.value},
                          {"origin", origin_label(candidate.origin)}});
    }
    report = {{"axis", args.axis},
              {"x_opt_m", result.x_opt},
              {"sir_max_linear", result.sir_max_opt},
              {"sir_max_db", result.sir_max_opt_db},
              {"candidates_total", result.candidates_total},
              {"candidates_feasible", result.candidates_feasible},
              {"feasible", feasible}};

    if (args.verify && axis == jamopt::Axis::x) {
      const jamopt::OracleResult oracle = jamopt::grid_oracle(scenario);
      const double gap =
          std::abs(result.sir_max_opt - oracle.value) /
          std::max({result.sir_max_opt, oracle.value, 1e-300});
      std::printf("oracle_x_m: %.10g\n", oracle.x);
      std::printf("oracle_sir_linear: %.10g\n", oracle.value);
      std::printf("oracle_relative_gap: %.3e\n", gap);
      report["oracle"] = {{"x_m", oracle.x},
                          {"sir_linear", oracle.value},
                          {"relative_gap", gap}};
    }
  }

  if (!args.output_path.empty()) {
    write_text(args.output_path, report.dump(2) + "\n");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jammer placement optimizer for relay networks over two-way "
               "UAV chains"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  CLI::App* solve_cmd =
      app.add_subcommand("solve", "Solve one scenario file");
  solve_cmd->add_option("--scenario", solve_args.scenario_path,
                        "Scenario JSON file")
      ->required();
  solve_cmd
      ->add_option("--y-msi", solve_args.y_msi,
                   "Override the scenario's fixed jammer y coordinate")
      ->each([&](const std::string&) { solve_args.y_msi_set = true; });
  solve_cmd->add_option("--x-msi", solve_args.x_msi,
                        "Fixed x coordinate for --axis y solves");
  solve_cmd->add_option("--axis", solve_args.axis, "Solve axis")
      ->check(CLI::IsMember({"x", "y"}));
  solve_cmd->add_option("--alternating-rounds", solve_args.alternating_rounds,
                        "Successive x/y refinement rounds (1 = single solve)");
  solve_cmd->add_flag("--strict-paper", solve_args.strict_paper,
                      "Drop the interval-endpoint candidates");
  solve_cmd->add_flag("--verify", solve_args.verify,
                      "Also run the grid oracle and print the gap");
  solve_cmd->add_option("--output", solve_args.output_path,
                        "Write a JSON report here");

  jamopt::SweepSpec sweep_spec;
  std::string sweep_output;
  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep-dualhop", "Reference single-relay sweep as CSV");
  sweep_cmd->add_option("--step", sweep_spec.step_m, "Relay x step in meters");
  sweep_cmd->add_option("--seed", sweep_spec.master_seed, "Master seed");
  sweep_cmd->add_option("--y-msi", sweep_spec.y_msi_m,
                        "Fixed jammer y coordinate");
  sweep_cmd->add_flag("--strict-paper", sweep_spec.strict_paper,
                      "Drop the interval-endpoint candidates");
  sweep_cmd->add_option("--output", sweep_output, "CSV output path");

  jamopt::RealizationSpec realization_spec;
  std::string realization_output;
  CLI::App* realizations_cmd = app.add_subcommand(
      "realizations", "Random multi-relay study as CSV plus summary");
  realizations_cmd->add_option("--n-uavs", realization_spec.n_uavs,
                               "Relays per realization");
  realizations_cmd->add_option("--count", realization_spec.count,
                               "Number of realizations");
  realizations_cmd->add_option("--seed", realization_spec.master_seed,
                               "Master seed");
  realizations_cmd->add_option("--y-msi", realization_spec.y_msi_m,
                               "Fixed jammer y coordinate");
  realizations_cmd->add_flag("--strict-paper", realization_spec.strict_paper,
                             "Drop the interval-endpoint candidates");
  realizations_cmd->add_option("--output", realization_output,
                               "CSV output path");

  std::string oracle_scenario;
  double oracle_y_msi = 0.0;
  bool oracle_y_msi_set = false;
  std::string oracle_output;
  CLI::App* oracle_cmd = app.add_subcommand(
      "oracle", "Brute-force grid minimum for a scenario file");
  oracle_cmd->add_option("--scenario", oracle_scenario, "Scenario JSON file")
      ->required();
  oracle_cmd
      ->add_option("--y-msi", oracle_y_msi,
                   "Override the scenario's fixed jammer y coordinate")
      ->each([&](const std::string&) { oracle_y_msi_set = true; });
  oracle_cmd->add_option("--output", oracle_output,
                         "Write a JSON report here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve_cmd->parsed()) {
      return run_solve(solve_args);
    }
    if (sweep_cmd->parsed()) {
      const jamopt::SweepResult result = jamopt::run_dualhop_sweep(sweep_spec);
      if (sweep_output.empty()) {
        std::fputs(result.csv.c_str(), stdout);
      } else {
        write_text(sweep_output, result.csv);
      }
      return 0;
    }
    if (realizations_cmd->parsed()) {
      const jamopt::RealizationResult result =
          jamopt::run_multihop_realizations(realization_spec,
                                            worker_threads());
      if (realization_output.empty()) {
        std::fputs(result.csv.c_str(), stdout);
      } else {
        write_text(realization_output, result.csv);
      }
      std::fputs(result.summary_text.c_str(), stderr);
      return 0;
    }
    if (oracle_cmd->parsed()) {
      jamopt::Scenario scenario = jamopt::load_scenario(oracle_scenario);
      if (oracle_y_msi_set) {
        scenario.y_msi_m = oracle_y_msi;
      }
      if (auto issues = jamopt::validate(scenario);
          jamopt::has_errors(issues)) {
        throw jamopt::ScenarioError(std::move(issues));
      }
      print_warnings(scenario);
      const jamopt::OracleResult result = jamopt::grid_oracle(scenario);
      std::printf("x_m: %.10g\n", result.x);
      std::printf("sir_linear: %.10g\n", result.value);
      std::printf("sir_db: %.6g\n", jamopt::sir_to_db(result.value));
      std::printf("grid_points: %lld\n", result.grid_points);
      if (!oracle_output.empty()) {
        const json report = {{"x_m", result.x},
                             {"sir_linear", result.value},
                             {"grid_points", result.grid_points}};
        write_text(oracle_output, report.dump(2) + "\n");
      }
      return 0;
    }
  } catch (const jamopt::ScenarioParseError& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitBadScenario;
  } catch (const jamopt::ScenarioError& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitBadScenario;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 1;
  }
  return 0;
}
