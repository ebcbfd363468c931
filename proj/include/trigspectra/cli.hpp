#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trigspectra {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitUsage = 2 };

/// Entry point of the `trigspectra` tool; `args` includes the program name.
/// Subcommands: verify, dump, table.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trigspectra
