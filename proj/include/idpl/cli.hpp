#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace idpl::cli {

enum ExitCode : int { kSuccess = 0, kUsageOrIo = 1, kInvalid = 2, kGenerationFailure = 3 };

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics and usage text to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace idpl::cli
