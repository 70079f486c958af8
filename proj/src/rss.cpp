#include "beaconloc/rss.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace beaconloc {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

void check(const FriisParams& p) {
  require(std::isfinite(p.wavelength) && p.wavelength > 0.0, "wavelength must be > 0");
  require(std::isfinite(p.tx_gain) && p.tx_gain >= 0.0, "tx_gain must be >= 0");
  require(std::isfinite(p.rx_gain) && p.rx_gain >= 0.0, "rx_gain must be >= 0");
  require(std::isfinite(p.tx_power) && p.tx_power >= 0.0, "tx_power must be >= 0");
}

void check(const PathLossParams& p) {
  require(std::isfinite(p.p_d0_dbm), "p_d0_dbm must be finite");
  require(std::isfinite(p.d0) && p.d0 > 0.0, "d0 must be > 0");
  require(std::isfinite(p.gamma) && p.gamma > 0.0, "gamma must be > 0");
  require(std::isfinite(p.sigma) && p.sigma >= 0.0, "sigma must be >= 0");
}

void check_distance(double d) {
  require(std::isfinite(d) && d > 0.0, "distance must be > 0");
}

}  // namespace

double friis_received_power(const FriisParams& params, double distance) {
  check(params);
  check_distance(distance);
  const double ratio = params.wavelength / (4.0 * std::numbers::pi * distance);
  return params.tx_power * params.tx_gain * params.rx_gain * ratio * ratio;
}

double rss_at(const PathLossParams& params, double distance, double shadow_db) {
  check(params);
  check_distance(distance);
  return params.p_d0_dbm - 10.0 * params.gamma * std::log10(distance / params.d0) +
         shadow_db;
}

double sample_shadow(const PathLossParams& params, RngStream& rng) {
  check(params);
  return normal_sample(rng, params.sigma);
}

double radius_from_threshold(const PathLossParams& params, double threshold_dbm) {
  check(params);
  require(std::isfinite(threshold_dbm), "threshold must be finite");
  if (threshold_dbm > params.p_d0_dbm) {
    throw std::invalid_argument(
        "threshold exceeds the power level at the reference distance");
  }
  return params.d0 * std::pow(10.0, (params.p_d0_dbm - threshold_dbm) / (10.0 * params.gamma));
}

double dbm_from_watts(double watts) {
  require(std::isfinite(watts) && watts > 0.0, "power must be > 0 W");
  return 10.0 * std::log10(watts * 1000.0);
}

double watts_from_dbm(double dbm) {
  require(std::isfinite(dbm), "power level must be finite");
  return std::pow(10.0, dbm / 10.0) / 1000.0;
}

}  // namespace beaconloc
