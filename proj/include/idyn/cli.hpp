#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace idyn {

/// Runs the command line `args` (without the program name).  Exit codes:
/// 0 answered / all expectations met, 1 violation or mismatch, 2 usage,
/// parse or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace idyn
