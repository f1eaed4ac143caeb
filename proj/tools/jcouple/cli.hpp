#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jcouple::cli {

/// Exit codes: 0 success, 1 rejected input (bad quantum numbers, failed
/// guards), 2 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Runs one invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jcouple::cli
