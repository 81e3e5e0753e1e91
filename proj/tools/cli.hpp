#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace swipt::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kValidation = 3, kNumeric = 4 };

/// Runs the command line `args` (without the program name). Results go to
/// `out` unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace swipt::cli
