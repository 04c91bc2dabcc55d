#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bnwall::cli {

// Runs one invocation given the argument list (program name excluded) and
// returns the process exit code: 0 success, 1 invalid input or usage error,
// 2 broken internal consistency. On success the output envelope goes to
// `out`; diagnostics go to `err` and leave `out` untouched.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace bnwall::cli
