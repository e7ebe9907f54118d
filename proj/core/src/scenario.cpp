#include "jamopt/scenario.hpp"

#include <cmath>
#include <string>

namespace jamopt {
namespace {

struct ChainNode {
  double x = 0.0;
  double y = 0.0;
  double h = 0.0;
  double power_dbm = 0.0;
  bool ground = false;
};

double squared_distance(const ChainNode& a, const ChainNode& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  const double dh = a.h - b.h;
  return dx * dx + dy * dy + dh * dh;
}

// Relay chain in transmission order: TR at the origin, the UAVs, TR at D.
std::vector<ChainNode> make_chain(const Scenario& s) {
  std::vector<ChainNode> chain;
  chain.reserve(s.uavs.size() + 2);
  chain.push_back({0.0, 0.0, 0.0, s.tr1_power_dbm, true});
  for (const UavRelay& u : s.uavs) {
    chain.push_back({u.x_m, u.y_m, u.h_m, u.power_dbm, false});
  }
  chain.push_back({s.distance_m, 0.0, 0.0, s.tr2_power_dbm, true});
  return chain;
}

QuadraticCurve make_curve(const ChainNode& tx, const ChainNode& rx,
                          double msi_power_mw, Axis axis,
                          double fixed_coordinate, const ChannelParams& ch) {
  // Signal excess factor: air-to-air links are LoS, air<->ground uses eta.
  const double k_signal =
      (tx.ground || rx.ground) ? ch.eta_nlos : mu_factor(ch, PathKind::los);
  // Interference excess factor at the receiver: the jammer is on the ground.
  const double k_interference =
      rx.ground ? mu_factor(ch, PathKind::nlos) : ch.eta_nlos;

  QuadraticCurve curve;
  curve.amplitude = dbm_to_linear(tx.power_dbm) * k_interference /
                    (msi_power_mw * k_signal * squared_distance(tx, rx));
  const double along = axis == Axis::x ? rx.x : rx.y;
  const double cross = axis == Axis::x ? rx.y : rx.x;
  curve.vertex_x = along;
  const double dc = fixed_coordinate - cross;
  curve.vertex_offset = dc * dc + rx.h * rx.h;
  return curve;
}

void require_finite(double value, const char* code, const char* message,
                    std::vector<ValidationIssue>& issues) {
  if (!std::isfinite(value)) {
    issues.push_back({code, message, Severity::error});
  }
}

}  // namespace

std::vector<ValidationIssue> validate(const Scenario& s) {
  std::vector<ValidationIssue> issues;

  if (!std::isfinite(s.distance_m) || s.distance_m <= 0.0) {
    issues.push_back({"distance-nonpositive",
                      "transceiver distance must be finite and > 0",
                      Severity::error});
  }
  if (s.uavs.empty()) {
    issues.push_back(
        {"no-uavs", "the relay chain must contain at least one UAV",
         Severity::error});
  }
  require_finite(s.tr1_power_dbm, "power-nonfinite",
                 "tr1_power_dbm must be finite", issues);
  require_finite(s.tr2_power_dbm, "power-nonfinite",
                 "tr2_power_dbm must be finite", issues);
  require_finite(s.msi_power_dbm, "power-nonfinite",
                 "msi_power_dbm must be finite", issues);
  require_finite(s.y_msi_m, "y-msi-nonfinite", "y_msi_m must be finite",
                 issues);

  for (std::size_t i = 0; i < s.uavs.size(); ++i) {
    const UavRelay& u = s.uavs[i];
    const std::string where = "uavs[" + std::to_string(i) + "]";
    if (!std::isfinite(u.h_m) || u.h_m <= 0.0) {
      issues.push_back({"uav-altitude-nonpositive",
                        where + ".h_m must be finite and > 0",
                        Severity::error});
    }
    if (!std::isfinite(u.x_m) || !std::isfinite(u.y_m)) {
      issues.push_back({"uav-coordinate-nonfinite",
                        where + " coordinates must be finite",
                        Severity::error});
    }
    if (!std::isfinite(u.power_dbm)) {
      issues.push_back({"power-nonfinite",
                        where + ".power_dbm must be finite", Severity::error});
    }
  }

  if (!std::isfinite(s.jam_lower_m) || !std::isfinite(s.jam_upper_m)) {
    issues.push_back({"jam-bounds-nonfinite",
                      "jammer bounds must be finite", Severity::error});
  } else if (s.jam_lower_m > s.jam_upper_m) {
    issues.push_back({"jam-bounds-inverted",
                      "jam_lower_m must not exceed jam_upper_m",
                      Severity::error});
  } else {
    if (s.jam_lower_m > 0.0) {
      issues.push_back({"jam-bound-lower-positive",
                        "lower jammer bound above 0; endpoint candidates "
                        "cover the truncated interval",
                        Severity::warning});
    }
    if (std::isfinite(s.distance_m) && s.jam_upper_m < s.distance_m) {
      issues.push_back({"jam-bound-upper-below-distance",
                        "upper jammer bound below the transceiver distance; "
                        "endpoint candidates cover the truncated interval",
                        Severity::warning});
    }
  }

  const ChannelParams& ch = s.channel;
  if (!std::isfinite(ch.carrier_frequency_hz) ||
      ch.carrier_frequency_hz <= 0.0) {
    issues.push_back({"channel-frequency-nonpositive",
                      "carrier_frequency_hz must be finite and > 0",
                      Severity::error});
  }
  if (!std::isfinite(ch.light_speed_mps) || ch.light_speed_mps <= 0.0) {
    issues.push_back({"channel-lightspeed-nonpositive",
                      "light_speed_mps must be finite and > 0",
                      Severity::error});
  }
  if (!std::isfinite(ch.eta_nlos) || ch.eta_nlos <= 0.0) {
    issues.push_back({"channel-eta-nonpositive",
                      "eta_nlos must be finite and > 0", Severity::error});
  }
  if (!(ch.path_loss_exponent == 2.0)) {
    issues.push_back({"channel-exponent-not-two",
                      "path_loss_exponent must equal 2", Severity::error});
  }
  if (!std::isfinite(ch.excess_los_db) || !std::isfinite(ch.excess_nlos_db)) {
    issues.push_back({"channel-excess-nonfinite",
                      "excess factors must be finite", Severity::error});
  }

  // Hop distances must be strictly positive or an SIR denominator vanishes.
  if (!s.uavs.empty()) {
    const std::vector<ChainNode> chain = make_chain(s);
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      if (!(squared_distance(chain[i], chain[i + 1]) > 0.0)) {
        issues.push_back({"zero-hop-distance",
                          "hop " + std::to_string(i) + " -> " +
                              std::to_string(i + 1) +
                              " of the relay chain has zero length",
                          Severity::error});
      }
    }
  }

  return issues;
}

bool has_errors(const std::vector<ValidationIssue>& issues) {
  for (const ValidationIssue& issue : issues) {
    if (issue.severity == Severity::error) {
      return true;
    }
  }
  return false;
}

namespace {

std::string format_issues(const std::vector<ValidationIssue>& issues) {
  std::string text = "scenario validation failed:";
  for (const ValidationIssue& issue : issues) {
    if (issue.severity == Severity::error) {
      text += " [" + issue.code + "] " + issue.message + ";";
    }
  }
  return text;
}

}  // namespace

ScenarioError::ScenarioError(std::vector<ValidationIssue> issues)
    : std::runtime_error(format_issues(issues)), issues_(std::move(issues)) {}

CurveSet build_curves(const Scenario& s, Axis axis, double fixed_coordinate) {
  if (auto issues = validate(s); has_errors(issues)) {
    throw ScenarioError(std::move(issues));
  }

  const std::vector<ChainNode> chain = make_chain(s);
  const double msi_mw = dbm_to_linear(s.msi_power_dbm);
  const std::size_t hops = chain.size() - 1;

  CurveSet set;
  set.axis = axis;
  set.fixed_coordinate = fixed_coordinate;
  set.link1.reserve(hops);
  set.link2.reserve(hops);
  for (std::size_t i = 1; i < chain.size(); ++i) {
    set.link1.push_back(
        make_curve(chain[i - 1], chain[i], msi_mw, axis, fixed_coordinate,
                   s.channel));
  }
  for (std::size_t i = chain.size() - 1; i-- > 0;) {
    set.link2.push_back(
        make_curve(chain[i + 1], chain[i], msi_mw, axis, fixed_coordinate,
                   s.channel));
  }
  return set;
}

Scenario dualhop_reference_scenario(double uav_x_m) {
  Scenario s;
  s.distance_m = 100.0;
  s.tr1_power_dbm = 30.0;
  s.tr2_power_dbm = 20.0;
  s.msi_power_dbm = 20.0;
  s.uavs = {{uav_x_m, 0.0, 45.0, 20.0}};
  s.y_msi_m = 0.0;
  s.jam_lower_m = -s.distance_m;
  s.jam_upper_m = 2.0 * s.distance_m;
  s.channel = reference_channel();
  return s;
}

}  // namespace jamopt
