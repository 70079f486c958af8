#pragma once

#include <string>

namespace beaconloc {

// 6 significant digits; used for statistics columns in CSV output.
std::string format_sig6(double value);

// Round-trip-exact decimal (%.17g); used where reloading must reproduce the
// same double.
std::string format_full(double value);

}  // namespace beaconloc
