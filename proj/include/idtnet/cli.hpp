#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace idtnet::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 2,   // unknown subcommand or flag, missing required flag
    exit_input = 3,   // missing or malformed input file, unwritable output
    exit_numeric = 4, // invalid value, failed convergence or construction
};

/// Runs one subcommand. `args` excludes the program name. Diagnostics go to
/// `err` as a single line; help text goes to `out`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Expands `--config FILE` into flags placed ahead of the remaining
/// arguments, so explicit flags win. Lines are `key = value`; blank lines and
/// lines starting with '#' are skipped. Throws InputError.
std::vector<std::string> expand_config(const std::vector<std::string>& args);

} // namespace idtnet::cli
