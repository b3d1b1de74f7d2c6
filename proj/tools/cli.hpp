#pragma once

#include <string>
#include <vector>

namespace moncp::cli {

enum ExitCode : int { ok = 0, input_error = 1, no_feasible = 2 };

/// Runs the tool on an argv-style list (args[0] is the program name).
int run(const std::vector<std::string>& args);

}  // namespace moncp::cli
