#include "beaconloc/montecarlo.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "beaconloc/format.hpp"

namespace beaconloc {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

void check(const TrialConfig& cfg) {
  require(cfg.trials >= 1, "trials must be >= 1");
  require(cfg.beacon_count >= 1, "beacon_count must be >= 1");
  require(std::isfinite(cfg.radius) && cfg.radius >= 0.0,
          "radius must be finite and >= 0");
  grid_dims(cfg.domain, cfg.grid);  // fail fast on a bad grid or domain
}

double single_trial(const TrialConfig& cfg, std::uint64_t trial_seed) {
  RngStream rng(trial_seed);
  const Deployment dep = random_deployment(cfg.domain, cfg.beacon_count, cfg.radius, rng);
  const SignatureMap map = build_signature_map(dep, cfg.grid);
  if (cfg.metric == UncertaintyMetric::expected_area_weighted) {
    return expected_uncertainty(map);
  }
  const Point target{uniform_in(rng, 0.0, cfg.domain.width),
                     uniform_in(rng, 0.0, cfg.domain.height)};
  return uncertainty_for_reading(map, signature_at(dep, target));
}

SweepRecord make_record(const TrialConfig& cfg, const TrialStats& stats) {
  return {cfg.beacon_count, cfg.radius,         cfg.trials, stats.mean,
          stats.stddev,     stats.cov,          stats.cov_defined};
}

}  // namespace

const char* to_string(UncertaintyMetric metric) {
  switch (metric) {
    case UncertaintyMetric::expected_area_weighted:
      return "expected_area_weighted";
    case UncertaintyMetric::sampled_target:
      return "sampled_target";
  }
  return "unknown";
}

std::optional<UncertaintyMetric> metric_from_string(std::string_view name) {
  if (name == "expected_area_weighted") return UncertaintyMetric::expected_area_weighted;
  if (name == "sampled_target") return UncertaintyMetric::sampled_target;
  return std::nullopt;
}

Deployment random_deployment(const Domain& domain, int count, double radius,
                             RngStream& rng) {
  require(count >= 0, "beacon count must be >= 0");
  require(std::isfinite(radius) && radius >= 0.0, "radius must be finite and >= 0");
  std::vector<Beacon> beacons;
  beacons.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double x = uniform_in(rng, 0.0, domain.width);
    const double y = uniform_in(rng, 0.0, domain.height);
    beacons.push_back({{x, y}, radius});
  }
  return Deployment(domain, std::move(beacons));
}

TrialStats compute_stats(const std::vector<double>& samples) {
  require(!samples.empty(), "at least one sample is required");
  const double n = static_cast<double>(samples.size());
  double sum = 0.0;
  for (double v : samples) sum += v;
  const double mean = sum / n;

  double ss = 0.0;
  for (double v : samples) {
    const double d = v - mean;
    ss += d * d;
  }
  const double stddev = samples.size() > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;

  TrialStats stats;
  stats.mean = mean;
  stats.stddev = stddev;
  stats.cov_defined = mean > 0.0;
  if (stats.cov_defined) stats.cov = stddev / mean;
  return stats;
}

TrialStats run_trials(const TrialConfig& cfg) {
  check(cfg);
  std::vector<double> values(static_cast<std::size_t>(cfg.trials));
  for (int t = 0; t < cfg.trials; ++t) {
    values[static_cast<std::size_t>(t)] =
        single_trial(cfg, mix_seed(cfg.seed, static_cast<std::uint64_t>(t)));
  }
  return compute_stats(values);
}

SweepResult sweep_radius(const TrialConfig& base, const std::vector<double>& radii) {
  require(!radii.empty(), "radii list must be nonempty");
  for (std::size_t i = 1; i < radii.size(); ++i) {
    require(radii[i] > radii[i - 1], "radii must be strictly increasing");
  }
  SweepResult out;
  out.records.reserve(radii.size());
  for (std::size_t i = 0; i < radii.size(); ++i) {
    TrialConfig cfg = base;
    cfg.radius = radii[i];
    cfg.seed = mix_seed(base.seed, i);
    out.records.push_back(make_record(cfg, run_trials(cfg)));
  }
  out.optimum_index = select_optimum(out.records);
  return out;
}

SweepResult sweep_beacons(const TrialConfig& base, const std::vector<int>& counts) {
  require(!counts.empty(), "beacon count list must be nonempty");
  require(counts.front() >= 1, "beacon counts must be >= 1");
  for (std::size_t i = 1; i < counts.size(); ++i) {
    require(counts[i] > counts[i - 1], "beacon counts must be strictly increasing");
  }
  SweepResult out;
  out.records.reserve(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    TrialConfig cfg = base;
    cfg.beacon_count = counts[i];
    cfg.seed = mix_seed(base.seed, i);
    out.records.push_back(make_record(cfg, run_trials(cfg)));
  }
  out.optimum_index = select_optimum(out.records);
  return out;
}

std::size_t select_optimum(const std::vector<SweepRecord>& records) {
  require(!records.empty(), "record list must be nonempty");
  std::size_t best = 0;
  for (std::size_t i = 1; i < records.size(); ++i) {
    const SweepRecord& a = records[i];
    const SweepRecord& b = records[best];
    const bool better =
        a.mean_uncertainty_pct < b.mean_uncertainty_pct ||
        (a.mean_uncertainty_pct == b.mean_uncertainty_pct &&
         (a.radius < b.radius ||
          (a.radius == b.radius && a.beacon_count < b.beacon_count)));
    if (better) best = i;
  }
  return best;
}

void write_sweep_csv(const SweepResult& result, std::ostream& os) {
  os << "beacons,radius,trials,mean_uncertainty_pct,std_uncertainty_pct,cov\n";
  for (const SweepRecord& r : result.records) {
    os << r.beacon_count << ',' << format_sig6(r.radius) << ',' << r.trials << ','
       << format_sig6(r.mean_uncertainty_pct) << ','
       << format_sig6(r.std_uncertainty_pct) << ','
       << (r.cov_defined ? format_sig6(r.cov) : "nan") << '\n';
  }
  const SweepRecord& opt = result.optimum();
  os << "# optimum: beacons=" << opt.beacon_count
     << ",radius=" << format_sig6(opt.radius) << '\n';
}

}  // namespace beaconloc
