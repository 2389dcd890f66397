#pragma once

#include <iosfwd>

namespace arrangetop {

/// Run the command-line front end. Returns the process exit code:
/// 0 success, 1 input/validation errors, 2 precondition failures,
/// 3 internal audit failures.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace arrangetop
