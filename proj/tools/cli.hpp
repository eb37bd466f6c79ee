#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace versal::cli {

/// Exit codes: 0 all checks passed, 1 an internal check failed,
/// 2 usage, input or computation error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitError = 2;

/// Runs one command line (args excludes the program name). Reports go to
/// out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace versal::cli
