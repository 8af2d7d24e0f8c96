#pragma once

namespace vacshift {

/// Entry point for the vacshift command-line tool.
/// Exit codes: 0 success, 1 configuration error, 2 numerical failure.
int run_cli(int argc, char** argv);

}  // namespace vacshift
