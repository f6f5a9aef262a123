#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace balldep::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitVerifyFailed = 1,
    kExitUsage = 2,
    kExitResource = 3,
    kExitInternal = 4,
};

/// Runs one `balldep` invocation. `args` excludes the program name. Data goes
/// to `out` (unless --out is given), progress and errors to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace balldep::cli
