#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace corpex::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitData = 3;

/// Runs the command line `args` (args[0] is the program name). Reports go
/// to `out` unless `--out` is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace corpex::cli
