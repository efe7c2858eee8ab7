#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spikegraph::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitOracleMismatch = 3;

/// Runs one command-line invocation. `args[0]` is the program name. JSON goes
/// to `out`, diagnostics and summaries to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spikegraph::cli
