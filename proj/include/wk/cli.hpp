#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wk::cli {

// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kNegative = 1,   // REJECT, DIFFER, failed suite
  kUsage = 2,
  kInputError = 3,  // unreadable or malformed file, foreign symbol
  kContract = 4,    // conversion precondition violated
};

// Runs `wkctl` with args[0] as the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace wk::cli
