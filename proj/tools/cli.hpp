#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rainbow::cli {

/// Exit codes shared by every verb.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFound = 1;  // violation, or a rainbow copy where freeness was asserted
inline constexpr int kExitUsage = 2;  // usage, parse, domain or refusal error

/// Runs one command line (without the program name). Graph input comes from
/// the positional file argument, or `in` when it is absent or "-".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace rainbow::cli
