#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dl4x::cli {

enum Exit : int { kConsistent = 0, kInconsistent = 1, kInputError = 2, kResourceLimit = 3 };

// Runs the command line `args` (without the program name). `check` is the
// default subcommand.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace dl4x::cli
