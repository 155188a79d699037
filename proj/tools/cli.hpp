// The qtorus command line, callable in-process for tests.

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qtorus::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// args excludes the program name.  Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qtorus::cli
