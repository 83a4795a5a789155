#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fusionrank::cli {

/// Exit statuses. Stable across releases.
enum Exit : int {
    kSuccess = 0,
    kDisagreement = 1,
    kUsage = 2,
    kPrecondition = 3,
};

/// Runs the command line. args excludes the program name. Results go to
/// out (or to --output), diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fusionrank::cli
