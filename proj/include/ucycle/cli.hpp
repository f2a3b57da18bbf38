#pragma once

// Command-line front end. Exit codes: 0 success or verification passed,
// 1 verification failed, 2 invalid flags or unparseable input, 3 resource cap.

#include <iosfwd>
#include <string>
#include <vector>

namespace ucycle {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResource = 3;

/// Runs one command. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace ucycle
