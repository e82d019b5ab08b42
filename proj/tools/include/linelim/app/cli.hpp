#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace linelim::app {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // I/O and other runtime failures
inline constexpr int kExitUsage = 2;    // invalid arguments or input data

/// Entry point behind the `linelim` executable. `args` excludes the program
/// name. Interactive prompts read from `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace linelim::app
