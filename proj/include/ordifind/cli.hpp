#pragma once

#include <iosfwd>

namespace ordifind {

/// Entry point of the `ordifind` command line tool.
///
/// Subcommands: factorize, lattice, rank, plot2d, serve. Returns 0 on
/// success, 2 on usage errors and 1 on input or computation failures.
int cli_run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ordifind
