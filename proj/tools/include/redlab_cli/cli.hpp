#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace redlab::cli {

enum ExitCode : int { Ok = 0, InvalidInput = 1, VerificationFailure = 2 };

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace redlab::cli
