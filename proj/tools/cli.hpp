#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hanoi::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Exit codes: 0 on
/// success, 1 when a verification check or comparison fails, 2 on usage or
/// feasibility errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hanoi::cli
