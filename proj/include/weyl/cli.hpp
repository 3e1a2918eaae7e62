#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace weyl {

inline constexpr int kExitUsage = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitDomain = 3;

/// Runs the `weyl` command line on `args` (without the program name).
/// Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace weyl
