#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ramcut::cli {

/// Runs one invocation; `args` excludes the program name. Diagnostics go to
/// `err` as "ramcut: error[<kind>]: <message>". Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string version();

}  // namespace ramcut::cli
