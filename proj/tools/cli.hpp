#pragma once

#include <ostream>

namespace hochlat::cli {

/// Exit codes: 0 success, 1 check failure or library error, 2 usage error
/// or size guard.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hochlat::cli
