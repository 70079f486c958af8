#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <string_view>
#include <vector>

#include "beaconloc/geometry.hpp"
#include "beaconloc/rng.hpp"
#include "beaconloc/sigmap.hpp"

namespace beaconloc {

// How one trial's uncertainty value is measured on a deployment's map:
// the area-weighted expectation over a uniform target, or the uncertainty
// of the reading at one uniformly drawn target point.
enum class UncertaintyMetric {
  expected_area_weighted,
  sampled_target,
};

const char* to_string(UncertaintyMetric metric);
std::optional<UncertaintyMetric> metric_from_string(std::string_view name);

struct TrialConfig {
  Domain domain{};
  GridSpec grid{};
  int beacon_count{1};
  double radius{0.0};
  int trials{500};
  std::uint64_t seed{0};
  UncertaintyMetric metric{UncertaintyMetric::expected_area_weighted};
};

struct TrialStats {
  double mean{0.0};
  double stddev{0.0};  // sample standard deviation, N-1 denominator
  double cov{std::numeric_limits<double>::quiet_NaN()};
  bool cov_defined{false};  // cov = stddev / mean, defined iff mean > 0
};

// Sample mean / std / cov of a nonempty value list. A single sample yields
// std = 0 and cov = 0.
TrialStats compute_stats(const std::vector<double>& samples);

struct SweepRecord {
  int beacon_count{0};
  double radius{0.0};
  int trials{0};
  double mean_uncertainty_pct{0.0};
  double std_uncertainty_pct{0.0};
  double cov{std::numeric_limits<double>::quiet_NaN()};
  bool cov_defined{false};
};

struct SweepResult {
  std::vector<SweepRecord> records;  // one per sweep point, in sweep order
  std::size_t optimum_index{0};

  const SweepRecord& optimum() const { return records[optimum_index]; }
};

// count beacons placed i.i.d. uniform over the domain rectangle, all with
// the given radius. Deterministic for a given stream state.
Deployment random_deployment(const Domain& domain, int count, double radius,
                             RngStream& rng);

// Repeats: draw a deployment, build its signature map, measure the trial's
// uncertainty per cfg.metric. Trial t runs on an independent stream seeded
// with mix_seed(cfg.seed, t); for sampled_target the target point is drawn
// from the same stream after the beacon positions.
TrialStats run_trials(const TrialConfig& cfg);

// One record per radius (strictly increasing list required). Point i runs
// run_trials with seed mix_seed(base.seed, i), so each sweep point's results
// are independent of the others.
SweepResult sweep_radius(const TrialConfig& base, const std::vector<double>& radii);

// One record per beacon count (strictly increasing, all >= 1).
SweepResult sweep_beacons(const TrialConfig& base, const std::vector<int>& counts);

// Index of the record with the smallest mean; ties prefer the smaller
// radius, then the smaller beacon count.
std::size_t select_optimum(const std::vector<SweepRecord>& records);

// CSV: header `beacons,radius,trials,mean_uncertainty_pct,std_uncertainty_pct,cov`,
// one row per sweep point, floats with 6 significant digits, then a trailing
// `# optimum: beacons=...,radius=...` comment line.
void write_sweep_csv(const SweepResult& result, std::ostream& os);

}  // namespace beaconloc
