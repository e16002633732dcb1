#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace balidx::cli {

// Exit statuses beyond the error codes carried by balidx::Error.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kNegativeVerdict = 5;

/// Runs one command line (without the program name); reports go to `out`,
/// diagnostics to `err`. Returns the process exit status.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace balidx::cli
