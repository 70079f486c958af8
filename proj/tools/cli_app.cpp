#include "cli_app.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "beaconloc/deployment_io.hpp"
#include "beaconloc/format.hpp"
#include "beaconloc/geometry.hpp"
#include "beaconloc/montecarlo.hpp"
#include "beaconloc/rss.hpp"
#include "beaconloc/sigmap.hpp"
#include "beaconloc/version.hpp"

namespace beaconloc::cli {

namespace {

std::string shell_quote(const std::string& v) {
  if (!v.empty() && v.find_first_of(" \t'\"") == std::string::npos) return v;
  std::string quoted = "'";
  for (char c : v) {
    if (c == '\'') {
      quoted += "'\\''";
    } else {
      quoted += c;
    }
  }
  quoted += "'";
  return quoted;
}

// Full post-defaulting parameter set of one invocation, emitted as comment
// header lines so every output is self-describing and re-runnable.
struct RunManifest {
  std::string subcommand;
  std::vector<std::pair<std::string, std::string>> params;
  std::optional<std::uint64_t> seed;
  std::string version{kVersion};

  void add(const std::string& key, const std::string& value) {
    params.emplace_back(key, value);
  }
  void add(const std::string& key, double value) { add(key, format_full(value)); }
  void add_seed(std::uint64_t value) {
    seed = value;
    add("seed", std::to_string(value));
  }

  void write(std::ostream& os) const {
    os << "# beaconloc " << version << '\n';
    os << "# command: beaconloc " << subcommand;
    for (const auto& [key, value] : params) {
      os << " --" << key << ' ' << shell_quote(value);
    }
    os << '\n';
  }
};

// Streams the writer to stdout when path is empty or "-", else to the file.
void with_output(const std::string& path, std::ostream& out,
                 const std::function<void(std::ostream&)>& writer) {
  if (path.empty() || path == "-") {
    writer(out);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file: " + path);
  writer(file);
  file.flush();
  if (!file) throw std::runtime_error("failed while writing output file: " + path);
}

std::vector<double> parse_range(const std::string& spec) {
  const auto first = spec.find(':');
  const auto second = spec.find(':', first == std::string::npos ? first : first + 1);
  if (first == std::string::npos || second == std::string::npos ||
      spec.find(':', second + 1) != std::string::npos) {
    throw std::invalid_argument("range must have the form start:stop:step, got '" + spec + "'");
  }
  const auto to_double = [&spec](const std::string& field) {
    try {
      std::size_t pos = 0;
      const double v = std::stod(field, &pos);
      if (pos != field.size() || !std::isfinite(v)) throw std::invalid_argument(field);
      return v;
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse range component '" + field + "' in '" +
                                  spec + "'");
    }
  };
  const double start = to_double(spec.substr(0, first));
  const double stop = to_double(spec.substr(first + 1, second - first - 1));
  const double step = to_double(spec.substr(second + 1));
  if (step <= 0.0) throw std::invalid_argument("range step must be > 0 in '" + spec + "'");
  if (start > stop) {
    throw std::invalid_argument("range start exceeds stop in '" + spec + "'");
  }
  const long long count = static_cast<long long>(std::floor((stop - start) / step + 1e-9));
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(count) + 1);
  for (long long k = 0; k <= count; ++k) {
    values.push_back(start + static_cast<double>(k) * step);
  }
  return values;
}

std::vector<int> parse_count_list(const std::string& spec) {
  std::vector<int> counts;
  std::size_t start = 0;
  while (start <= spec.size()) {
    const auto comma = spec.find(',', start);
    const std::string field =
        spec.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    try {
      std::size_t pos = 0;
      const int v = std::stoi(field, &pos);
      if (pos != field.size()) throw std::invalid_argument(field);
      counts.push_back(v);
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse beacon count '" + field + "' in '" + spec +
                                  "'");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (counts.empty()) throw std::invalid_argument("beacon count list is empty");
  return counts;
}

struct GridFlags {
  double width{100.0};
  double height{100.0};
  double cell{1.0};

  Domain domain() const { return {width, height}; }
  GridSpec grid() const { return {cell}; }
  void add_to(RunManifest& m) const {
    m.add("width", width);
    m.add("height", height);
    m.add("cell", cell);
  }
};

void add_grid_flags(CLI::App* cmd, GridFlags& flags) {
  cmd->add_option("--width", flags.width, "domain width (default 100)");
  cmd->add_option("--height", flags.height, "domain height (default 100)");
  cmd->add_option("--cell", flags.cell, "grid cell size (default 1)");
}

struct GenOptions {
  int count{0};
  double radius{0.0};
  std::uint64_t seed{0};
  GridFlags grid;
  std::string out;
};

int cmd_gen(const GenOptions& opt, std::ostream& out) {
  RngStream rng(opt.seed);
  const Deployment dep = random_deployment(opt.grid.domain(), opt.count, opt.radius, rng);

  RunManifest manifest;
  manifest.subcommand = "gen";
  manifest.add("count", std::to_string(opt.count));
  manifest.add("radius", opt.radius);
  manifest.add_seed(opt.seed);
  manifest.add("width", opt.grid.width);
  manifest.add("height", opt.grid.height);
  manifest.add("out", opt.out.empty() ? "-" : opt.out);

  with_output(opt.out, out, [&](std::ostream& os) {
    manifest.write(os);
    write_deployment_csv(dep, os);
  });
  return 0;
}

struct LocalizeOptions {
  std::string deployment_file;
  std::string reading;
  GridFlags grid;
  std::string out;
};

int cmd_localize(const LocalizeOptions& opt, std::ostream& out, std::ostream& err) {
  const Deployment dep = load_deployment_file(opt.deployment_file, opt.grid.domain());
  const Signature reading = Signature::parse(opt.reading);
  const SignatureMap map = build_signature_map(dep, opt.grid.grid());
  const LocalizationResult result = localize(map, reading);
  if (result.empty()) {
    err << "warning: no grid cell matches reading '" << opt.reading
        << "'; empty localization region\n";
  }

  RunManifest manifest;
  manifest.subcommand = "localize";
  manifest.add("deployment", opt.deployment_file);
  manifest.add("reading", opt.reading);
  opt.grid.add_to(manifest);
  if (!opt.out.empty()) manifest.add("out", opt.out);

  with_output(opt.out, out, [&](std::ostream& os) {
    manifest.write(os);
    os << "uncertainty_pct,area,centroid_x,centroid_y,cells\n";
    os << format_sig6(result.uncertainty_pct) << ',' << format_sig6(result.area) << ','
       << format_sig6(result.centroid.x) << ',' << format_sig6(result.centroid.y) << ','
       << result.cells.size() << '\n';
  });
  return 0;
}

struct DumpOptions {
  std::string deployment_file;
  GridFlags grid;
  std::string out;
};

int cmd_dump(const DumpOptions& opt, std::ostream& out) {
  const Deployment dep = load_deployment_file(opt.deployment_file, opt.grid.domain());
  const SignatureMap map = build_signature_map(dep, opt.grid.grid());

  RunManifest manifest;
  manifest.subcommand = "dump";
  manifest.add("deployment", opt.deployment_file);
  opt.grid.add_to(manifest);
  manifest.add("out", opt.out.empty() ? "-" : opt.out);

  with_output(opt.out, out, [&](std::ostream& os) {
    manifest.write(os);
    write_signature_map_csv(map, os);
  });
  return 0;
}

struct SweepOptions {
  std::string mode;
  int beacons{0};
  double radius{-1.0};
  std::string radii;
  std::string counts;
  int trials{500};
  std::uint64_t seed{0};
  std::string metric{"expected_area_weighted"};
  GridFlags grid;
  std::string out;
};

int cmd_sweep(const SweepOptions& opt, std::ostream& out, std::ostream& err,
              const CLI::App* cmd) {
  TrialConfig base;
  base.domain = opt.grid.domain();
  base.grid = opt.grid.grid();
  base.trials = opt.trials;
  base.seed = opt.seed;
  base.metric = *metric_from_string(opt.metric);
  if (opt.trials == 1) {
    err << "warning: a single trial per sweep point; std and cov are degenerate\n";
  }

  RunManifest manifest;
  manifest.subcommand = "sweep";
  manifest.add("mode", opt.mode);

  SweepResult result;
  if (opt.mode == "radius") {
    if (!cmd->count("--beacons") || !cmd->count("--radii")) {
      throw std::invalid_argument("--mode radius requires --beacons and --radii");
    }
    if (cmd->count("--radius") || cmd->count("--counts")) {
      throw std::invalid_argument("--mode radius does not accept --radius or --counts");
    }
    base.beacon_count = opt.beacons;
    manifest.add("beacons", std::to_string(opt.beacons));
    manifest.add("radii", opt.radii);
    result = sweep_radius(base, parse_range(opt.radii));
  } else {
    if (!cmd->count("--radius") || !cmd->count("--counts")) {
      throw std::invalid_argument("--mode beacons requires --radius and --counts");
    }
    if (cmd->count("--beacons") || cmd->count("--radii")) {
      throw std::invalid_argument("--mode beacons does not accept --beacons or --radii");
    }
    base.radius = opt.radius;
    manifest.add("radius", opt.radius);
    manifest.add("counts", opt.counts);
    result = sweep_beacons(base, parse_count_list(opt.counts));
  }

  manifest.add("trials", std::to_string(opt.trials));
  manifest.add_seed(opt.seed);
  manifest.add("metric", opt.metric);
  opt.grid.add_to(manifest);
  manifest.add("out", opt.out);

  with_output(opt.out, out, [&](std::ostream& os) {
    manifest.write(os);
    write_sweep_csv(result, os);
  });

  const SweepRecord& best = result.optimum();
  out << "optimum: beacons=" << best.beacon_count << ",radius=" << format_sig6(best.radius)
      << ",mean_uncertainty_pct=" << format_sig6(best.mean_uncertainty_pct) << '\n';
  return 0;
}

struct RssOptions {
  double p_d0_dbm{0.0};
  double d0{1.0};
  double gamma{2.0};
  double sigma{0.0};
  std::optional<double> threshold_dbm;
  std::optional<double> distance;
  std::optional<std::uint64_t> seed;
};

int cmd_rss(const RssOptions& opt, std::ostream& out) {
  if (opt.distance.has_value() == opt.threshold_dbm.has_value()) {
    throw std::invalid_argument("pass exactly one of --distance or --threshold-dbm");
  }
  const PathLossParams params{opt.p_d0_dbm, opt.d0, opt.gamma, opt.sigma};

  RunManifest manifest;
  manifest.subcommand = "rss";
  manifest.add("p-d0-dbm", opt.p_d0_dbm);
  manifest.add("d0", opt.d0);
  manifest.add("gamma", opt.gamma);
  manifest.add("sigma", opt.sigma);

  double value = 0.0;
  if (opt.distance) {
    manifest.add("distance", *opt.distance);
    double shadow = 0.0;
    if (opt.seed) {
      manifest.add_seed(*opt.seed);
      RngStream rng(*opt.seed);
      shadow = sample_shadow(params, rng);
    }
    value = rss_at(params, *opt.distance, shadow);
  } else {
    manifest.add("threshold-dbm", *opt.threshold_dbm);
    value = radius_from_threshold(params, *opt.threshold_dbm);
  }

  manifest.write(out);
  out << format_full(value) << '\n';
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"target localization from binary beacon proximity readings"};
  app.name("beaconloc");
  bool show_version = false;
  app.add_flag("--version", show_version, "print version and exit");
  app.require_subcommand(0, 1);

  GenOptions gen_opt;
  CLI::App* gen = app.add_subcommand("gen", "write a random deployment CSV");
  gen->add_option("--count", gen_opt.count, "number of beacons")
      ->required()
      ->check(CLI::NonNegativeNumber);
  gen->add_option("--radius", gen_opt.radius, "sensing radius for every beacon")->required();
  gen->add_option("--seed", gen_opt.seed, "master seed (default 0)");
  add_grid_flags(gen, gen_opt.grid);
  gen->add_option("--out", gen_opt.out, "output file ('-' or omitted for stdout)");

  LocalizeOptions loc_opt;
  CLI::App* loc = app.add_subcommand("localize", "localization region for one reading");
  loc->add_option("--deployment", loc_opt.deployment_file, "deployment CSV file")->required();
  loc->add_option("--reading", loc_opt.reading,
                  "'0'/'1' reading string, one character per beacon")
      ->required();
  add_grid_flags(loc, loc_opt.grid);
  loc->add_option("--out", loc_opt.out, "output file ('-' or omitted for stdout)");

  DumpOptions dump_opt;
  CLI::App* dump = app.add_subcommand("dump", "per-cell signature map CSV");
  dump->add_option("--deployment", dump_opt.deployment_file, "deployment CSV file")
      ->required();
  add_grid_flags(dump, dump_opt.grid);
  dump->add_option("--out", dump_opt.out, "output file ('-' or omitted for stdout)");

  SweepOptions sweep_opt;
  CLI::App* sweep = app.add_subcommand("sweep", "Monte Carlo sweep over radius or beacon count");
  sweep->add_option("--mode", sweep_opt.mode, "swept parameter")
      ->required()
      ->check(CLI::IsMember({"radius", "beacons"}));
  sweep->add_option("--beacons", sweep_opt.beacons, "beacon count (radius mode)")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--radius", sweep_opt.radius, "sensing radius (beacons mode)");
  sweep->add_option("--radii", sweep_opt.radii, "inclusive radius range start:stop:step");
  sweep->add_option("--counts", sweep_opt.counts, "comma-separated beacon counts");
  sweep->add_option("--trials", sweep_opt.trials, "trials per sweep point (default 500)")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--seed", sweep_opt.seed, "master seed (default 0)");
  sweep->add_option("--metric", sweep_opt.metric, "per-trial uncertainty measure")
      ->check(CLI::IsMember({"expected_area_weighted", "sampled_target"}));
  add_grid_flags(sweep, sweep_opt.grid);
  sweep->add_option("--out", sweep_opt.out, "output CSV file")->required();

  RssOptions rss_opt;
  CLI::App* rss = app.add_subcommand("rss", "path-loss model queries");
  rss->add_option("--p-d0-dbm", rss_opt.p_d0_dbm, "power level at the reference distance")
      ->required();
  rss->add_option("--d0", rss_opt.d0, "reference distance (default 1)");
  rss->add_option("--gamma", rss_opt.gamma, "path-loss exponent (default 2)");
  rss->add_option("--sigma", rss_opt.sigma, "shadow-fading std dev in dB (default 0)");
  rss->add_option("--threshold-dbm", rss_opt.threshold_dbm,
                  "print the radius where the mean model hits this level");
  rss->add_option("--distance", rss_opt.distance, "print the power level at this distance");
  rss->add_option("--seed", rss_opt.seed,
                  "draw one shadow sample from this seeded stream (with --distance)");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("beaconloc");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  if (show_version) {
    out << "beaconloc " << kVersion << '\n';
    return 0;
  }

  try {
    if (gen->parsed()) return cmd_gen(gen_opt, out);
    if (loc->parsed()) return cmd_localize(loc_opt, out, err);
    if (dump->parsed()) return cmd_dump(dump_opt, out);
    if (sweep->parsed()) return cmd_sweep(sweep_opt, out, err, sweep);
    if (rss->parsed()) return cmd_rss(rss_opt, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  err << app.help();
  return 1;
}

}  // namespace beaconloc::cli
