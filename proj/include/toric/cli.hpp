#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace toric {

// Runs one toriclab invocation. `args` excludes the program name. Returns the
// process exit status: 0 success, 1 domain or validation error, 2 usage error
// or unreadable input.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toric
