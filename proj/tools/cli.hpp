#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cyclic::cli {

inline constexpr const char* kSchemaVersion = "1";

/// Exit statuses: 0 success, 1 verification mismatch, 2 usage or
/// precondition error.
enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2 };

/// Runs one command line (args[0] is the program name). Records go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace cyclic::cli
