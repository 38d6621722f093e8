// cli.hpp - the rhzeta command-line front end, callable in-process
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rhz::cli {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kInvalidInput = 2,
    kNumericalBreakdown = 3,
    kOracleDomain = 4,
    kInfeasibleDesign = 5,
};

/// Runs one invocation. `args` excludes the program name. Data goes to the
/// --out file (or `out`); any non-zero exit writes exactly one JSON line to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rhz::cli
