#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sudoku::cli {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,           ///< at least one solution, verify passed, or catalog listed
    kNoSolution = 1,   ///< zero solutions, or verify found duplicates
    kInputError = 2,   ///< unreadable or malformed input, bad flags
    kCapReached = 3,   ///< the printed count is only a lower bound
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace sudoku::cli
