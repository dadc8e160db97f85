#pragma once

#include <iosfwd>

namespace cbsteiner {

// Exit codes of the steiner tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitParse = 2,
    kExitInvalid = 3,       // invalid or infeasible input, disconnected graph
    kExitOracleScale = 4,
    kExitInternal = 5,      // internal inconsistency, trace diff, failed audit
};

// Runs one subcommand. The JSON report goes to `out`, a human summary and
// diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cbsteiner
