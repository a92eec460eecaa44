#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lpa {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitPrecondition = 2, kExitInternal = 3 };

/// Runs the command line `args` (args[0] is the program name). Structured
/// output goes to `out`, diagnostics to `err`; `in` backs the "-" graph path.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace lpa
