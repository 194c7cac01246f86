#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cageforge::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kExpectationFailed = 1,
  kInputError = 2,
  kPlanFailed = 3,
};

/// Runs one `cageforge` invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cageforge::cli
