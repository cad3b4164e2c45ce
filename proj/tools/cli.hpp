#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qspin::cli {

enum ExitCode : int {
    kOk = 0,
    kArgumentError = 2,
    kDomainError = 3,
    kNumericalError = 4,
};

/// Runs the command line `args` (args[0] is the program name). Results go to
/// `out` unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qspin::cli
