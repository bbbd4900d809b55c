#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ldi {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;      // verification or validation failure
inline constexpr int kExitParseError = 2;  // malformed input file or command line

/// Runs one command; args excludes the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace ldi
