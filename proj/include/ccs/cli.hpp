#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ccs::cli {

enum ExitCode : int { kSuccess = 0, kCheckFailed = 1, kInputError = 2, kDomainError = 3 };

// Runs one command line (without the program name). The tolerance default can be overridden
// through the CCSLAB_EPS environment variable.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ccs::cli
