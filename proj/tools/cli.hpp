#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace copwin::cli {

/// Runs one command line (without the program name). Returns the exit
/// status: 0 on success, 1 when `verify` finds a violation or a criterion
/// fails, 2 on usage or input errors.
int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace copwin::cli
