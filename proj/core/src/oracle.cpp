#include "jamopt/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "jamopt/solver.hpp"

namespace jamopt {

OracleResult grid_min(const CurveSet& curves, double lo, double hi,
                      int coarse_points, int refine_iters) {
  if (!(lo <= hi)) {
    throw std::invalid_argument("grid_min: empty interval");
  }
  if (coarse_points < 1) {
    throw std::invalid_argument("grid_min: need at least one grid point");
  }

  OracleResult best;
  best.x = lo;
  best.value = evaluate_sir_max(curves, lo);
  best.grid_points = 1;
  best.refined = refine_iters > 0;

  double cur_lo = lo;
  double cur_hi = hi;
  for (int round = 0; round <= refine_iters; ++round) {
    if (round > 0) {
      const double width = (cur_hi - cur_lo) / 10.0;
      cur_lo = std::max(lo, best.x - width / 2.0);
      cur_hi = std::min(hi, best.x + width / 2.0);
    }
    const int points = cur_hi > cur_lo ? coarse_points : 1;
    for (int i = 0; i < points; ++i) {
      const double t =
          points == 1
              ? cur_lo
              : cur_lo + (cur_hi - cur_lo) * static_cast<double>(i) /
                             static_cast<double>(points - 1);
      const double value = evaluate_sir_max(curves, t);
      ++best.grid_points;
      if (value < best.value || (value == best.value && t < best.x)) {
        best.x = t;
        best.value = value;
      }
    }
  }
  return best;
}

OracleResult grid_oracle(const Scenario& scenario, int coarse_points,
                         int refine_iters) {
  const CurveSet curves =
      build_curves(scenario, Axis::x, scenario.y_msi_m);
  return grid_min(curves, scenario.jam_lower_m, scenario.jam_upper_m,
                  coarse_points, refine_iters);
}

}  // namespace jamopt
