#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace evenparity::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace evenparity::cli
