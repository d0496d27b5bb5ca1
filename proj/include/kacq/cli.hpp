#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kacq {

// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitCap = 3,
  kExitVerify = 4,
};

// args excludes the program name
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kacq
