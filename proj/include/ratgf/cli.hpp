#pragma once

#include <ostream>

namespace ratgf {

// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitUnbounded = 2,
  kExitOracleMismatch = 3,
  kExitDegreeBudget = 4,
  kExitEmpty = 5,
};

// Runs one command. Output goes to `out` only on success; failures write a
// single diagnostic line to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ratgf
