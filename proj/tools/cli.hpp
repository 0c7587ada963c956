#pragma once

#include <iosfwd>

namespace kmloop::cli {

enum ExitCode { kPass = 0, kCheckFailed = 1, kBadConfig = 2, kResourceCap = 3 };

/// Runs one command line (argv[0] is the program name). Output goes to `out`,
/// diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kmloop::cli
