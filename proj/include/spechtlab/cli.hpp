#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spechtlab {

/// Exit codes of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitSearchFailed = 3;

/// Entry point of the command-line tool; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spechtlab
