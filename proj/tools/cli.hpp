#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rspin::cli {

inline constexpr const char* kReportTag = "# rspin-report v1";

/// Runs one command line (without the program name). Reports go to `out`, diagnostics
/// to `err`. Returns 0 on success, 1 on invalid input, 2 when a verification suite fails.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rspin::cli
