#pragma once

#include <iosfwd>

namespace tpa {

/// Runs the command line tool; returns the process exit code
/// (0 success, 1 usage or input error, 2 verification mismatch).
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace tpa
