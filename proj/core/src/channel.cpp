#include "jamopt/channel.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace jamopt {

double dbm_to_linear(double p_dbm) {
  if (!std::isfinite(p_dbm)) {
    throw std::invalid_argument("dbm_to_linear: input must be finite");
  }
  return std::pow(10.0, p_dbm / 10.0);
}

double sir_to_db(double sir_linear) {
  if (std::isnan(sir_linear) || sir_linear < 0.0) {
    throw std::invalid_argument("sir_to_db: input must be >= 0");
  }
  if (sir_linear == 0.0) {
    return -std::numeric_limits<double>::infinity();
  }
  return 10.0 * std::log10(sir_linear);
}

double mu_factor(const ChannelParams& params, PathKind kind) {
  const double excess_db =
      kind == PathKind::los ? params.excess_los_db : params.excess_nlos_db;
  const double excess = std::pow(10.0, excess_db / 10.0);
  const double wavenumber = 4.0 * std::numbers::pi *
                            params.carrier_frequency_hz /
                            params.light_speed_mps;
  return excess * std::pow(wavenumber, params.path_loss_exponent);
}

ChannelParams reference_channel() {
  ChannelParams params;
  params.eta_nlos = mu_factor(params, PathKind::los);
  return params;
}

}  // namespace jamopt
