#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rpart::cli {

enum ExitCode : int {
    ok = 0,
    usage_error = 1,
    bound_violation = 2,
    oracle_mismatch = 3,
};

/// Parses argv (argv[0] is the program name) and runs one subcommand.
int dispatch(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

} // namespace rpart::cli
