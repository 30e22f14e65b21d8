#pragma once

#include <iosfwd>

namespace stirlab::cli {

/// Full command-line front end; returns the process exit code.
/// Output goes to `out`, diagnostics to `err`, so tests can capture both.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace stirlab::cli
