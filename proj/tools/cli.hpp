#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qcgoppa::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kMismatch = 1;
inline constexpr int kUsage = 2;
inline constexpr int kRootInSupport = 3;
inline constexpr int kQcFailed = 4;

/// Runs the command line (args excludes the program name). Machine output goes to out,
/// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcgoppa::cli
