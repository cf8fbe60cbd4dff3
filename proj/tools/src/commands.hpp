#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace flagforge::cli {

/// Runs one CLI invocation (argv without the program name) against the
/// given streams. Exit codes: 0 success, 1 verification mismatch,
/// 2 usage/parse failure, 3 enumeration budget exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace flagforge::cli
