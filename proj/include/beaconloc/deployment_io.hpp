#pragma once

#include <iosfwd>
#include <string>

#include "beaconloc/geometry.hpp"

namespace beaconloc {

// Deployment CSV: header `id,x,y,r`, one row per beacon, beacon order = row
// order. Blank lines and `#` comment lines are skipped. The id column is
// informational; bit order comes from row order.
Deployment read_deployment_csv(std::istream& in, const Domain& domain);
Deployment load_deployment_file(const std::string& path, const Domain& domain);

// Writes ids 0..n-1 and round-trip-exact coordinates.
void write_deployment_csv(const Deployment& dep, std::ostream& os);

}  // namespace beaconloc
