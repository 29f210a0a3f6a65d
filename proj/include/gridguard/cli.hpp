#pragma once

#include <iosfwd>

namespace gridguard {

/// Command-line entry point. Returns 0 on success, 1 on a usage or
/// configuration error, 2 on a runtime failure.
int run_cli(int argc, char** argv);
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace gridguard
