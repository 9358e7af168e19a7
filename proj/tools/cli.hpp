#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace aqmds::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 2;
inline constexpr int kVerificationFailed = 3;

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace aqmds::cli
