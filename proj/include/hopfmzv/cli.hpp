#pragma once

#include <iosfwd>

namespace hopfmzv {

/// Runs the hopfmzv command line. Returns the process exit code: 0 on
/// success, 1 on a domain error (or a failed check), 2 on a usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace hopfmzv
