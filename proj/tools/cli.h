#ifndef STABLEFLOW_TOOLS_CLI_H_
#define STABLEFLOW_TOOLS_CLI_H_

#include <ostream>

namespace stableflow {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUnstable = 1;  // also: a failed crosscheck
inline constexpr int kExitUsage = 2;     // bad flags or unparsable input
inline constexpr int kExitError = 3;

// Entry point of the `stableflow` tool with injectable output streams.
int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace stableflow

#endif  // STABLEFLOW_TOOLS_CLI_H_
