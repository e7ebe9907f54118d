#include "jamopt/baselines.hpp"

#include <stdexcept>
#include <string>

#include "jamopt/solver.hpp"

namespace jamopt {
namespace {

BaselinePoint evaluate_at(const Scenario& scenario, double x) {
  const CurveSet curves =
      build_curves(scenario, Axis::x, scenario.y_msi_m);
  return {x, evaluate_sir_max(curves, x)};
}

}  // namespace

BaselinePoint baseline_chase(const Scenario& scenario, int uav_index) {
  if (uav_index < 1 || uav_index > static_cast<int>(scenario.uavs.size())) {
    throw std::out_of_range("baseline_chase: uav_index " +
                            std::to_string(uav_index) +
                            " outside 1.." +
                            std::to_string(scenario.uavs.size()));
  }
  return evaluate_at(scenario,
                     scenario.uavs[static_cast<std::size_t>(uav_index - 1)].x_m);
}

BaselinePoint baseline_random(const Scenario& scenario, RngStream& stream) {
  return evaluate_at(scenario, stream.next_uniform(0.0, scenario.distance_m));
}

BaselinePoint baseline_middle(const Scenario& scenario) {
  return evaluate_at(scenario, scenario.distance_m / 2.0);
}

}  // namespace jamopt
