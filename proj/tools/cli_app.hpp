#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace beaconloc::cli {

// Parses and executes one command-line invocation. `args` excludes the
// program name. Data goes to `out` or to the file named by --out;
// diagnostics go to `err`. Returns 0 iff the requested computation
// completed.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace beaconloc::cli
