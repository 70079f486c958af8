#pragma once

namespace beaconloc {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace beaconloc
