#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rcb::cli {

enum ExitCode : int { kOk = 0, kMalformed = 1, kViolations = 2 };

/// Runs one `rcb` invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace rcb::cli
