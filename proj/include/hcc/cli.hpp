#pragma once

#include <ostream>

namespace hcc {

/// Entry point of the `hcc` command. Returns 0 on success, 1 on input
/// errors, 2 when a theorem invariant is violated.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hcc
