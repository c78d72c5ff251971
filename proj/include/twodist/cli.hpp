#pragma once

#include <ostream>

namespace twodist {

/// Entry point of the twodist command line; returns the process exit code.
/// Exit codes: 0 ok, 1 other failure, 2 parse error, 3 size limit,
/// 4 undecidable, 5 infeasible, 6 complete graph where one is not allowed.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace twodist
