#pragma once

#include "beaconloc/rng.hpp"

namespace beaconloc {

// Free-space link parameters. Powers in watts, wavelength in meters.
struct FriisParams {
  double tx_power{1.0};
  double tx_gain{1.0};
  double rx_gain{1.0};
  double wavelength{1.0};
};

// Log-distance path-loss model parameters. p_d0_dbm is the power level at
// the reference distance d0; gamma is the path-loss exponent; sigma is the
// shadow-fading standard deviation in dB.
struct PathLossParams {
  double p_d0_dbm{0.0};
  double d0{1.0};
  double gamma{2.0};
  double sigma{0.0};
};

// Received power P_t * G_t * G_r * (lambda / (4 pi d))^2. Throws for d <= 0.
double friis_received_power(const FriisParams& params, double distance);

// p_d0_dbm - 10 * gamma * log10(d / d0) + shadow_db. The shadow term is a
// caller-supplied draw; pass 0 for the deterministic mean model. Throws for
// d <= 0.
double rss_at(const PathLossParams& params, double distance, double shadow_db = 0.0);

// One draw from Normal(0, sigma^2) on the caller's stream.
double sample_shadow(const PathLossParams& params, RngStream& rng);

// Distance at which the mean model hits threshold_dbm:
// r = d0 * 10^((p_d0_dbm - threshold_dbm) / (10 * gamma)).
// Throws when the threshold exceeds p_d0_dbm.
double radius_from_threshold(const PathLossParams& params, double threshold_dbm);

double dbm_from_watts(double watts);
double watts_from_dbm(double dbm);

}  // namespace beaconloc
