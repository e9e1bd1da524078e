#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace operon::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Exit statuses of run().
enum ExitStatus : int { kSuccess = 0, kDomainError = 1, kUsageError = 2 };

/// Runs one invocation. `args` excludes the program name. Reports go to
/// `out`, diagnostics and usage synopses to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace operon::cli
