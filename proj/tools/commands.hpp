#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vrank::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// Runs one invocation (args excludes the program name). Results go to `out`,
/// diagnostics and search statistics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vrank::cli
