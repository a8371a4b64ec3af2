#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rbu::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitData = 1;
inline constexpr int kExitParameter = 2;
inline constexpr int kExitIo = 3;

// Runs the command line `args` (without the program name). Normal output goes
// to `out`, diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rbu::cli
