#pragma once

#include <ostream>

namespace multidesign::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,       // verification failure or nonexistence
  kUsage = 2,         // bad arguments, unreadable/unparseable input, unwritable output
  kInconclusive = 3,  // search budget exhausted
};

// Runs one command line (argv[0] is the program name).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace multidesign::cli
