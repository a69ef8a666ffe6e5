#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hopfz::cli {

inline constexpr const char* kToolVersion = "0.1.0";

/// Exit status: 0 success or is_lie_hopf, 2 not_lie_hopf or a failed check,
/// 1 invalid input.
enum ExitCode { kSuccess = 0, kInputError = 1, kNegative = 2 };

/// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hopfz::cli
