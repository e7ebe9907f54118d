#pragma once

#include "jamopt/scenario.hpp"

namespace jamopt {

struct OracleResult {
  double x = 0.0;
  double value = 0.0;
  long long grid_points = 0;  // total objective evaluations
  bool refined = false;
};

/// Brute-force minimum of the max-min SIR over [lo, hi]: a uniform grid of
/// coarse_points, then refine_iters rounds of 10x interval shrinking around
/// the best point seen so far (clamped to [lo, hi], best value carried
/// across rounds). Deterministic.
OracleResult grid_min(const CurveSet& curves, double lo, double hi,
                      int coarse_points, int refine_iters);

/// X-axis oracle over the scenario's jammer interval at its fixed y.
OracleResult grid_oracle(const Scenario& scenario, int coarse_points = 10001,
                         int refine_iters = 6);

}  // namespace jamopt
