#include "beaconloc/format.hpp"

#include <cmath>
#include <cstdio>

namespace beaconloc {

namespace {

std::string format_with(const char* fmt, double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, value);
  return buf;
}

}  // namespace

std::string format_sig6(double value) { return format_with("%.6g", value); }

std::string format_full(double value) { return format_with("%.17g", value); }

}  // namespace beaconloc
