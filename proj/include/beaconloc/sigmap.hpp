#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <unordered_map>
#include <vector>

#include "beaconloc/geometry.hpp"

namespace beaconloc {

// Square cells overlaid on a Domain. cell_size must divide both domain
// extents into a whole number of cells.
struct GridSpec {
  double cell_size{1.0};
};

struct GridDims {
  std::size_t nx{0};
  std::size_t ny{0};
  std::size_t cell_count() const { return nx * ny; }
};

// Cell counts for a grid over a domain. Throws std::invalid_argument when
// cell_size is not a positive exact divisor of both extents.
GridDims grid_dims(const Domain& domain, const GridSpec& grid);

// One distinct reading: the cells whose centers produce it and their total
// area (cell count x cell_size^2).
struct SignatureGroup {
  Signature signature;
  std::vector<std::uint32_t> cells;  // row-major cell indices, ascending
  double area{0.0};
};

// Partition of the grid by shared signature. Every cell belongs to exactly
// one group; group order is the order of first appearance in cell order.
// Immutable after build.
class SignatureMap {
 public:
  const Deployment& deployment() const { return dep_; }
  const GridSpec& grid() const { return grid_; }
  std::size_t nx() const { return dims_.nx; }
  std::size_t ny() const { return dims_.ny; }
  std::size_t cell_count() const { return dims_.cell_count(); }
  double cell_area() const { return grid_.cell_size * grid_.cell_size; }
  double domain_area() const { return dep_.domain().area(); }

  const std::vector<SignatureGroup>& groups() const { return groups_; }
  std::uint32_t group_of_cell(std::size_t cell) const { return group_of_cell_[cell]; }
  const Signature& signature_of_cell(std::size_t cell) const {
    return groups_[group_of_cell_[cell]].signature;
  }
  // Center point of cell index c = iy * nx + ix.
  Point cell_center(std::size_t cell) const {
    const double c = grid_.cell_size;
    return {(static_cast<double>(cell % dims_.nx) + 0.5) * c,
            (static_cast<double>(cell / dims_.nx) + 0.5) * c};
  }
  std::optional<std::uint32_t> find_group(const Signature& reading) const;

 private:
  friend SignatureMap build_signature_map(const Deployment&, const GridSpec&);
  SignatureMap() = default;

  Deployment dep_;
  GridSpec grid_;
  GridDims dims_;
  std::vector<SignatureGroup> groups_;
  std::vector<std::uint32_t> group_of_cell_;
  std::unordered_map<Signature, std::uint32_t, SignatureHash> index_;
};

// Labels every cell with the signature of its center point and groups cells
// by identical signature. The result is identical to evaluating signature_at
// at each cell center in cell order.
SignatureMap build_signature_map(const Deployment& dep, const GridSpec& grid);

// 100 x (area of cells whose signature equals the reading) / (domain area).
// Returns 0 when no cell has that reading. Throws on length mismatch.
double uncertainty_for_reading(const SignatureMap& map, const Signature& reading);

// The region of grid cells consistent with one reading. An empty region
// (no matching cell) is a valid result, flagged via empty().
struct LocalizationResult {
  Signature reading;
  std::vector<std::uint32_t> cells;
  double area{0.0};
  double uncertainty_pct{0.0};
  Point centroid{std::numeric_limits<double>::quiet_NaN(),
                 std::numeric_limits<double>::quiet_NaN()};

  bool empty() const { return cells.empty(); }
};

// Region, area, uncertainty percentage and centroid (mean of member cell
// centers) for a reading. Throws only on length mismatch.
LocalizationResult localize(const SignatureMap& map, const Signature& reading);

// Area-weighted mean uncertainty for a uniformly random target:
// 100 x sum over distinct signatures k of (A_k / A_total)^2.
double expected_uncertainty(const SignatureMap& map);

// CSV dump: header `cell_ix,cell_iy,signature`, one row per cell in
// row-major order, signature as a '0'/'1' string.
void write_signature_map_csv(const SignatureMap& map, std::ostream& os);

}  // namespace beaconloc
