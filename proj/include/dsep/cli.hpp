#pragma once

namespace dsep {

// Entry point for the command-line tool; exposed as a library call so tests
// can drive it in-process. Returns 0 on success, 1 on input errors, 2 on
// internal assertion failures.
int run_cli(int argc, const char* const* argv);

}  // namespace dsep
