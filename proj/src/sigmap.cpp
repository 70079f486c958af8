#include "beaconloc/sigmap.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string_view>

namespace beaconloc {

namespace {

// Caps the per-cell reading buffer (cell_count x beacon_count bytes).
constexpr std::size_t kMaxCells = 100'000'000;
constexpr std::size_t kMaxReadingBytes = 1u << 30;

void check_reading_length(const SignatureMap& map, const Signature& reading) {
  if (reading.size() != map.deployment().size()) {
    throw std::invalid_argument(
        "reading length " + std::to_string(reading.size()) +
        " does not match beacon count " + std::to_string(map.deployment().size()));
  }
}

}  // namespace

GridDims grid_dims(const Domain& domain, const GridSpec& grid) {
  const double cell = grid.cell_size;
  if (!std::isfinite(cell) || cell <= 0.0) {
    throw std::invalid_argument("cell_size must be finite and positive");
  }
  const auto side = [cell](double extent, const char* name) -> std::size_t {
    const long long n = std::llround(extent / cell);
    if (n < 1 ||
        std::abs(static_cast<double>(n) * cell - extent) > 1e-9 * std::max(extent, 1.0)) {
      throw std::invalid_argument(std::string("cell_size must evenly divide the domain ") + name);
    }
    return static_cast<std::size_t>(n);
  };
  GridDims dims{side(domain.width, "width"), side(domain.height, "height")};
  if (dims.cell_count() > kMaxCells) {
    throw std::invalid_argument("grid is too fine: cell count exceeds the supported maximum");
  }
  return dims;
}

std::optional<std::uint32_t> SignatureMap::find_group(const Signature& reading) const {
  const auto it = index_.find(reading);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SignatureMap build_signature_map(const Deployment& dep, const GridSpec& grid) {
  SignatureMap map;
  map.dep_ = dep;
  map.grid_ = grid;
  map.dims_ = grid_dims(dep.domain(), grid);

  const std::size_t nx = map.dims_.nx;
  const std::size_t ny = map.dims_.ny;
  const std::size_t ncells = map.dims_.cell_count();
  const std::size_t n = dep.size();
  const double cell = grid.cell_size;

  if (n > 0 && ncells > kMaxReadingBytes / n) {
    throw std::invalid_argument("grid x beacon count exceeds the reading buffer budget");
  }

  // Per-cell reading bytes, cell-major. Rather than testing every cell
  // against every beacon, each beacon's disk is rasterized over the cells
  // inside its bounding box; the exact per-center test decides membership,
  // so the outcome equals the all-pairs evaluation.
  std::vector<std::uint8_t> bits(std::max<std::size_t>(ncells * n, 1), 0);
  for (std::size_t i = 0; i < n; ++i) {
    const Beacon& b = dep.beacons()[i];
    if (b.radius <= 0.0) continue;  // the strict test can never pass
    const double r2 = b.radius * b.radius;
    // Candidate index window, widened one cell against rounding.
    const auto window = [cell, &b](double center, std::size_t count) {
      const double lo = (center - b.radius) / cell - 0.5;
      const double hi = (center + b.radius) / cell - 0.5;
      const long long first = static_cast<long long>(std::floor(lo)) - 1;
      const long long last = static_cast<long long>(std::ceil(hi)) + 1;
      return std::pair<std::size_t, std::size_t>(
          static_cast<std::size_t>(std::max<long long>(first, 0)),
          static_cast<std::size_t>(
              std::min<long long>(last, static_cast<long long>(count) - 1)));
    };
    const auto [ix0, ix1] = window(b.position.x, nx);
    const auto [iy0, iy1] = window(b.position.y, ny);
    for (std::size_t iy = iy0; iy <= iy1; ++iy) {
      const double dy = (static_cast<double>(iy) + 0.5) * cell - b.position.y;
      const double dy2 = dy * dy;
      for (std::size_t ix = ix0; ix <= ix1; ++ix) {
        const double dx = (static_cast<double>(ix) + 0.5) * cell - b.position.x;
        if (dx * dx + dy2 < r2) bits[(iy * nx + ix) * n + i] = 1;
      }
    }
  }

  // Group cells by identical reading; group order = first appearance in
  // ascending cell order, which keeps builds reproducible.
  std::unordered_map<std::string_view, std::uint32_t> first_seen;
  first_seen.reserve(1024);
  map.group_of_cell_.resize(ncells);
  const char* base = reinterpret_cast<const char*>(bits.data());
  for (std::size_t c = 0; c < ncells; ++c) {
    const std::string_view key(base + c * n, n);
    const auto [it, inserted] =
        first_seen.try_emplace(key, static_cast<std::uint32_t>(map.groups_.size()));
    if (inserted) {
      SignatureGroup g;
      g.signature = Signature(std::vector<std::uint8_t>(
          bits.begin() + static_cast<std::ptrdiff_t>(c * n),
          bits.begin() + static_cast<std::ptrdiff_t>(c * n + n)));
      map.groups_.push_back(std::move(g));
    }
    map.groups_[it->second].cells.push_back(static_cast<std::uint32_t>(c));
    map.group_of_cell_[c] = it->second;
  }

  const double cell_area = cell * cell;
  for (auto& g : map.groups_) {
    g.area = static_cast<double>(g.cells.size()) * cell_area;
  }
  map.index_.reserve(map.groups_.size());
  for (std::uint32_t gi = 0; gi < map.groups_.size(); ++gi) {
    map.index_.emplace(map.groups_[gi].signature, gi);
  }
  return map;
}

double uncertainty_for_reading(const SignatureMap& map, const Signature& reading) {
  check_reading_length(map, reading);
  const auto gi = map.find_group(reading);
  if (!gi) return 0.0;
  return 100.0 * map.groups()[*gi].area / map.domain_area();
}

LocalizationResult localize(const SignatureMap& map, const Signature& reading) {
  check_reading_length(map, reading);
  LocalizationResult result;
  result.reading = reading;
  const auto gi = map.find_group(reading);
  if (!gi) return result;  // empty region, flagged via empty()

  const SignatureGroup& g = map.groups()[*gi];
  result.cells = g.cells;
  result.area = g.area;
  result.uncertainty_pct = 100.0 * g.area / map.domain_area();
  double sx = 0.0;
  double sy = 0.0;
  for (std::uint32_t c : g.cells) {
    const Point center = map.cell_center(c);
    sx += center.x;
    sy += center.y;
  }
  const double count = static_cast<double>(g.cells.size());
  result.centroid = {sx / count, sy / count};
  return result;
}

double expected_uncertainty(const SignatureMap& map) {
  const double total = map.domain_area();
  double acc = 0.0;
  for (const SignatureGroup& g : map.groups()) {
    const double frac = g.area / total;
    acc += frac * frac;
  }
  return 100.0 * acc;
}

void write_signature_map_csv(const SignatureMap& map, std::ostream& os) {
  os << "cell_ix,cell_iy,signature\n";
  std::vector<std::string> text(map.groups().size());
  for (std::size_t gi = 0; gi < map.groups().size(); ++gi) {
    text[gi] = map.groups()[gi].signature.to_string();
  }
  const std::size_t nx = map.nx();
  for (std::size_t c = 0; c < map.cell_count(); ++c) {
    os << (c % nx) << ',' << (c / nx) << ',' << text[map.group_of_cell(c)] << '\n';
  }
}

}  // namespace beaconloc
