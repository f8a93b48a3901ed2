#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace brauerkit::cli {

/// Exit codes: 0 success (including every verdict), 1 domain error,
/// 2 malformed input or bad command line.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitMalformed = 2;

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace brauerkit::cli
