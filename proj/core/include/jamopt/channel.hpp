#pragma once

namespace jamopt {

/// Excess path-loss regime of a link.
enum class PathKind { los, nlos };

/// Carrier and path-loss constants. Excess factors for LoS/NLoS links are
/// stored in dB; eta_nlos is the linear excess factor applied to air<->ground
/// links. The closed-form curve algebra downstream requires
/// path_loss_exponent == 2; validate() enforces it.
struct ChannelParams {
  double carrier_frequency_hz = 2.0e9;
  double light_speed_mps = 299'792'458.0;
  double path_loss_exponent = 2.0;
  double excess_los_db = 3.0;
  double excess_nlos_db = 23.0;
  double eta_nlos = 0.0;  // must be set explicitly or via reference_channel()
};

/// dBm to milliwatts: 10^(p/10). Throws std::invalid_argument on non-finite
/// input.
double dbm_to_linear(double p_dbm);

/// 10*log10(sir). Returns -infinity for sir == 0; throws
/// std::invalid_argument on negative input.
double sir_to_db(double sir_linear);

/// mu = 10^(excess_db/10) * (4*pi*fc/c)^alpha for the requested regime.
double mu_factor(const ChannelParams& params, PathKind kind);

/// The channel preset used by the bundled experiments: 2 GHz carrier,
/// 3 dB / 23 dB excess factors, eta_nlos tied to mu_los.
ChannelParams reference_channel();

}  // namespace jamopt
