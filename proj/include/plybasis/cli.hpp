#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace plybasis {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitAudit = 2;

/// Entry point of the command-line tool. `args` excludes the program name.
/// Reports go to `out`, diagnostics to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace plybasis
