#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace weylres {

/// Runs the command line `args` (without the program name). Results go to
/// `out`, diagnostics to `err`. Returns 0 on success, 1 when a check fails
/// or the input is outside the operation's domain, 2 on usage and parse
/// errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace weylres
