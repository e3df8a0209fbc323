#pragma once

#include <iosfwd>

namespace vfunc::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kParseError = 2,
  kNotGeneralPosition = 3,
  kVerdictFail = 4,
};

/// Entry point of the vfunc tool. Diagnostics go to `err` as one line
/// starting with "error:".
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace vfunc::cli
