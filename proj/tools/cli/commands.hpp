#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace truncvar::cli {

/// Runs the tool with argv-style arguments (args[0] is the program name).
/// Returns the process exit code: 0 success, 2 bad usage, 3 malformed
/// input, 4 numeric-domain violation, 5 I/O failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace truncvar::cli
