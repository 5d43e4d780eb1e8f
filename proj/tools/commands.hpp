#pragma once

#include <iosfwd>

namespace spectre::cli {

// Parses argv and runs one subcommand.  Exit codes: 0 success, 1 validation
// error, 2 internal inconsistency.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

} // namespace spectre::cli
