#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orderaut {

// Exit codes shared by every subcommand.
enum ExitCode : int
{
    exit_holds = 0,
    exit_fails = 1,
    exit_error = 2,
    exit_undecided = 3,
};

// Runs the command line (without the program name). Results go to out,
// one-line diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace orderaut
