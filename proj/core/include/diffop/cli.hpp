#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace diffop {

// Runs one command with argv-style arguments (program name excluded) and
// returns the process exit code: 0 for success or a true verdict, 1 for a
// false verdict or failed suites, 2 for parse and usage errors, 3 for
// violated preconditions, 4 for anything else.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace diffop
