#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace escher::cli {

enum ExitCode : int {
    kOk = 0,
    kOracleMismatch = 1,
    kUsage = 2,
    kInvalidPattern = 3,
    kExcludedRule = 4,
    kBadParams = 5,
    kAmplitudeTooLarge = 6,
    kIoError = 7,
    kInternal = 70,
};

/// Runs one command line (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace escher::cli
