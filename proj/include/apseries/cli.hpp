#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace aps::cli {

// Runs one CLI invocation. `args` excludes the program name. Exit codes:
// 0 success, 1 user error, 2 internal/corrupt-data. Diagnostics are one line
// on `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace aps::cli
