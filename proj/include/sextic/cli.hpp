#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sextic {

/// Exit codes of run_command.
enum ExitCode : int { kExitSuccess = 0, kExitFailure = 1, kExitUsage = 2 };

/// args excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sextic
