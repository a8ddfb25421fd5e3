#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace scaling::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

/// Runs one command line (args excludes the program name). Normal output goes
/// to `out`; diagnostics and usage text to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace scaling::cli
