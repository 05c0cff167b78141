#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace besg
{

// Exit codes of the command-line tool.
enum exit_code : int
{
    exit_ok = 0,
    exit_usage = 1,
    exit_parse = 2,
    exit_precondition = 3,
};

// Runs `besg` with the given arguments (program name excluded).
int run_cli( const std::vector<std::string>& args, std::ostream& out, std::ostream& err );

} // namespace besg
