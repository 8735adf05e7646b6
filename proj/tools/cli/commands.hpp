#pragma once

namespace k3cliff::cli {

// Parses and runs one CLI invocation. Exit codes: 0 verified, 1 verification
// failure, 2 usage or range error.
int run_cli(int argc, const char* const* argv);

}  // namespace k3cliff::cli
