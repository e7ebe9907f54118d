#pragma once

#include "jamopt/rng.hpp"
#include "jamopt/scenario.hpp"

namespace jamopt {

struct BaselinePoint {
  double x = 0.0;
  double sir = 0.0;
};

/// Jammer directly under relay uav_index (1-based along the chain).
/// Throws std::out_of_range for an index outside 1..N.
BaselinePoint baseline_chase(const Scenario& scenario, int uav_index);

/// Jammer at a uniform random position between the transceivers; consumes
/// exactly one draw from the stream.
BaselinePoint baseline_random(const Scenario& scenario, RngStream& stream);

/// Jammer at the midpoint between the transceivers.
BaselinePoint baseline_middle(const Scenario& scenario);

}  // namespace jamopt
