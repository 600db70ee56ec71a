#pragma once

#include <iosfwd>

namespace seed::cli {

/// Runs one `seed` invocation. Data goes to files or `out`, diagnostics to
/// `err`. Returns 0 on success, 2 when an input or library check fails,
/// and CLI11's code for usage errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace seed::cli
