#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gmrfd::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitNoFeasible = 3;

/// Runs one command line (program name excluded). Tables go to `out` unless
/// --output names a file; diagnostics go to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gmrfd::cli
