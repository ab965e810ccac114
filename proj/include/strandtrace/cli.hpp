#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "strandtrace/symfun.hpp"

namespace strandtrace {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInvalid = 2;

/// Test seam: lets a test corrupt the trace-side value of `compute --via both`
/// before it is compared with the oracle.
struct CliHooks {
  std::function<void(SymFun&)> corrupt_trace;
};

/// Runs the tool on `args` (without the program name). Results go to `out`,
/// diagnostics to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const CliHooks& hooks = {});

}  // namespace strandtrace
