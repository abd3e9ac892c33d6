#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace expriordan::cli {

/// Runs one command line (args[0] is the program name). Results go to
/// `out`, diagnostics to `err`. Returns the process exit status.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace expriordan::cli
