#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "jamopt/channel.hpp"
#include "jamopt/quadratic.hpp"

namespace jamopt {

/// One relay of the chain. Altitude must be positive; the chain is ordered
/// from the transceiver at the origin towards the one at distance_m.
struct UavRelay {
  double x_m = 0.0;
  double y_m = 0.0;
  double h_m = 0.0;
  double power_dbm = 0.0;
};

/// The full network: two ground transceivers at (0,0,0) and (distance_m,0,0),
/// an ordered relay chain between them, and the jammer's movement interval
/// [jam_lower_m, jam_upper_m] along the x axis.
struct Scenario {
  double distance_m = 0.0;
  double tr1_power_dbm = 0.0;
  double tr2_power_dbm = 0.0;
  double msi_power_dbm = 0.0;
  std::vector<UavRelay> uavs;
  double y_msi_m = 0.0;  // fixed cross coordinate of the jammer
  double jam_lower_m = 0.0;
  double jam_upper_m = 0.0;
  ChannelParams channel;
};

enum class Axis { x, y };

enum class Severity { warning, error };

struct ValidationIssue {
  std::string code;
  std::string message;
  Severity severity = Severity::error;
};

/// Reports every violated invariant. Bound violations against the assumed
/// jam_lower <= 0 <= distance <= jam_upper interval come back as warnings;
/// everything else is an error.
std::vector<ValidationIssue> validate(const Scenario& scenario);

bool has_errors(const std::vector<ValidationIssue>& issues);

/// Thrown by operations that require a valid scenario.
class ScenarioError : public std::runtime_error {
 public:
  explicit ScenarioError(std::vector<ValidationIssue> issues);
  const std::vector<ValidationIssue>& issues() const { return issues_; }

 private:
  std::vector<ValidationIssue> issues_;
};

/// All 2N+2 per-receiver SIR curves along one axis, with the other
/// coordinate of the jammer frozen at fixed_coordinate. Amplitudes carry the
/// 1/p_msi factor, so eval() returns the physical SIR. link1 runs from the
/// origin transceiver towards the far one; link2 is the reverse direction.
struct CurveSet {
  std::vector<QuadraticCurve> link1;  // receivers UAV_1..UAV_N, TR_2
  std::vector<QuadraticCurve> link2;  // receivers UAV_N..UAV_1, TR_1
  Axis axis = Axis::x;
  double fixed_coordinate = 0.0;

  int curve_count() const { return static_cast<int>(link1.size() + link2.size()); }
  bool in_link1(int id) const { return id < static_cast<int>(link1.size()); }
  const QuadraticCurve& curve(int id) const {
    const auto n1 = static_cast<int>(link1.size());
    return id < n1 ? link1[static_cast<std::size_t>(id)]
                   : link2[static_cast<std::size_t>(id - n1)];
  }
};

/// Builds the curve set for a validated scenario. Throws ScenarioError when
/// validate() reports errors.
CurveSet build_curves(const Scenario& scenario, Axis axis,
                      double fixed_coordinate);

/// The bundled single-relay experiment preset: 100 m transceiver spacing,
/// 30/20/20 dBm transmit powers, one 45 m relay at (uav_x, 0).
Scenario dualhop_reference_scenario(double uav_x_m = 50.0);

}  // namespace jamopt
