#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rlat::cli {

enum ExitCode : int {
  kOk = 0,
  kValidationFailure = 1,
  kViolations = 2,
  kInputError = 3,
};

/// `args` excludes the program name. FILE arguments of "-" read `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace rlat::cli
