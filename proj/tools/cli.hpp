#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace calambda::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNotVerified = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

/// Runs the command line (args excludes the program name). Reads the
/// CA_LAMBDA_CAP environment variable for the interaction cap.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace calambda::cli
