#pragma once

#include <ostream>

namespace metlie::cli {

/// Exit codes of the command line front end.
enum Exit : int {
  Ok = 0,
  CheckFailed = 1,
  Parse = 2,
  Jacobi = 3,
  NotNilInvariant = 4,
  NonSolvable = 5,
  InvalidParams = 6,
  Internal = 70,
};

/// Entry point shared by the binary and the tests. Normal output goes to
/// `out`; diagnostics go to `err` as one JSON object per line.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace metlie::cli
