#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bnet {

/// Process exit codes of `bnctl`.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitParse = 2,
    kExitLimit = 3,
};

/// Runs `bnctl` with `args` (program name excluded).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bnet
