#pragma once

namespace rcc {

/// Entry point behind the rcc binary; exposed so tests can drive the CLI
/// in-process. Returns the process exit code (0 ok, 1 input error,
/// 2 solver finished without converging).
int run_cli(int argc, const char* const* argv);

}  // namespace rcc
