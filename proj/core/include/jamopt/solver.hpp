#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "jamopt/scenario.hpp"

namespace jamopt {

enum class RootSign { minus, plus };
enum class BoundSide { lower, upper };

/// Where a candidate point came from. Curve ids are flat indices into the
/// owning CurveSet: 0..N for link1, N+1..2N+1 for link2.
struct VertexOrigin {
  int curve;
};
struct WithinLinkOrigin {
  int curve_a;
  int curve_b;
  RootSign sign;
};
struct CrossLinkOrigin {
  int curve_link1;
  int curve_link2;
  RootSign sign;
};
struct EndpointOrigin {
  BoundSide side;
};

using CandidateOrigin =
    std::variant<VertexOrigin, WithinLinkOrigin, CrossLinkOrigin,
                 EndpointOrigin>;

struct CandidatePoint {
  double x = 0.0;
  double value = 0.0;
  CandidateOrigin origin;
};

struct CandidateSet {
  std::vector<CandidatePoint> points;
  /// Enumeration slots (vertices plus two roots per curve pair): 4N^2+8N+4.
  int slot_count = 0;
};

/// max over the two links of the per-link minimum SIR at coordinate t.
double evaluate_sir_max(const CurveSet& curves, double t);

/// Every vertex plus every pairwise intersection root, in deterministic
/// order. Pairs that do not intersect, or that coincide as functions,
/// contribute no points.
CandidateSet enumerate_candidates(const CurveSet& curves,
                                  double eps_intersect = 1e-12);

/// Whether the candidate lies on the graph of the max-min SIR: its curve must
/// attain its own link's minimum there and not be dominated by the other
/// link (for cross-link roots, both curves must attain their links' minima).
bool is_feasible(const CandidatePoint& candidate, const CurveSet& curves,
                 double eps_feas = 1e-9);

struct SolveOptions {
  /// Append the interval endpoints as always-feasible candidates so tight
  /// jammer bounds stay correct. Disabled by strict-paper mode.
  bool include_endpoints = true;
  double eps_feas = 1e-9;
  double eps_intersect = 1e-12;
  /// Overrides the scenario's jammer interval (used for the cross axis).
  std::optional<std::pair<double, double>> bounds;
};

struct PlacementResult {
  double x_opt = 0.0;
  double sir_max_opt = 0.0;
  double sir_max_opt_db = 0.0;
  int candidates_total = 0;     // enumeration slots
  int candidates_feasible = 0;  // surviving candidates incl. endpoints
  std::vector<CandidatePoint> feasible_list;  // audit trail, values recomputed
};

/// Minimizes the max-min SIR over the jammer interval along the given axis,
/// with the cross coordinate frozen. Ties break towards the smallest
/// coordinate. Throws ScenarioError on invalid scenarios.
PlacementResult solve(const Scenario& scenario, Axis axis,
                      double fixed_coordinate, const SolveOptions& options = {});

/// X-axis solve at the scenario's fixed jammer y coordinate.
PlacementResult solve(const Scenario& scenario);

/// Single-relay specialization: the four curves and their five admissible
/// intersection pairs written out literally. Requires exactly one UAV.
PlacementResult solve_dualhop(const Scenario& scenario,
                              double fixed_coordinate,
                              const SolveOptions& options = {});

struct AlternatingOptions {
  int max_rounds = 8;
  double tol_rel = 1e-9;
  /// Interval for the y rounds; defaults to the scenario's x jam bounds.
  std::optional<std::pair<double, double>> y_bounds;
  SolveOptions solve;
};

struct AlternatingResult {
  double x = 0.0;
  double y = 0.0;
  double sir = 0.0;
  double sir_db = 0.0;
  int rounds_used = 0;
};

/// Successive coordinate refinement: solve along x with y frozen, then along
/// y with x frozen, until the relative improvement drops below tol_rel or
/// max_rounds 1-D solves ran. The SIR is non-increasing across rounds.
AlternatingResult solve_alternating(const Scenario& scenario, double initial_y,
                                    const AlternatingOptions& options = {});

}  // namespace jamopt
