#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mmpw::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailure = 1,
  kParseError = 2,
  kValidationError = 3,
  kBudgetExceeded = 4,
  kNonGenericSegment = 5,
};

/// Runs one command line (without the program name). Documents go to `out`
/// unless -o names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace mmpw::cli
