#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hallkit {

/// Runs one command line (without the program name). Exit codes: 0 when every
/// computation and embedded check succeeds, 1 on a failed check, 2 on bad
/// input or an exceeded budget.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace hallkit
