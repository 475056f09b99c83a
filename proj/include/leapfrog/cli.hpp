#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace leapfrog::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (args[0] is the program name). Returns 0 on success
/// with nothing violated, 1 when a property fails or a campaign finds
/// violations, 2 on usage, parse, or validation errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace leapfrog::cli
