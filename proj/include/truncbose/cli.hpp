#ifndef TRUNCBOSE_CLI_HPP
#define TRUNCBOSE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace truncbose::cli {

inline constexpr const char* tool_version = "1.0.0";

// Exit codes: 0 success, 1 check/assertion failure, 2 usage/domain error.
inline constexpr int exit_ok = 0;
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_usage = 2;

// Dispatches one command line (without the program name) and writes results
// to `out`, diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace truncbose::cli

#endif
