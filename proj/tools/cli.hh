/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef APG_GUARD_TOOLS_CLI_HH
#define APG_GUARD_TOOLS_CLI_HH 1

#include <iosfwd>
#include <string>
#include <vector>

namespace apg::cli
{
    enum ExitStatus : int
    {
        success = 0,
        property_false = 1,
        usage_error = 2,
        precondition_violation = 3
    };

    /**
     * Runs one command. args excludes the program name. An input file named
     * "-" is read from in.
     */
    auto run(const std::vector<std::string> & args, std::istream & in, std::ostream & out, std::ostream & err) -> int;
}

#endif
