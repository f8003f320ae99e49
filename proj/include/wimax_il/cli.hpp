#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wimax_il::cli {

enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailed = 1,
    kUsageError = 2,
};

struct CommandOutcome {
    int exit_code = kSuccess;
    std::string summary;
    std::vector<std::string> artifacts;
};

/// Entry point shared by the executable and the tests. args[0] is the
/// program name.
CommandOutcome run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wimax_il::cli
