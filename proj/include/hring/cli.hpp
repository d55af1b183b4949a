#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hring {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // violations or a tier 1 check failure
inline constexpr int kExitUsage = 2;    // usage, I/O or parse error

/// Entry point of the `hring` tool. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hring
