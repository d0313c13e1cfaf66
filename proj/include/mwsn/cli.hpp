#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace mwsn::cli {

/// Command line entry point. Subcommands: analyze, simulate, sweep, minnodes,
/// snapshot. Returns 0 on success, 1 on configuration errors, 2 on runtime
/// errors.
int dispatch(int argc, const char* const* argv, std::ostream& out = std::cout,
             std::ostream& err = std::cerr);

/// Same, for callers holding the arguments (without the program name) as
/// strings.
int dispatch(const std::vector<std::string>& args,
             std::ostream& out = std::cout, std::ostream& err = std::cerr);

}  // namespace mwsn::cli
