#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace splitlab {

/// Exit codes of run_cli.
enum ExitCode : int {
    kExitOk = 0,
    /// A verification check failed, or a discrepancy was found under --fail-on-discrepancy.
    kExitFail = 1,
    kExitUsage = 2,
    /// Unreadable or malformed input file, or an instance the exact oracle refuses.
    kExitInput = 3,
};

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace splitlab
