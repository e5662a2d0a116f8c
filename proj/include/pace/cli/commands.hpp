#pragma once

namespace pace::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitRuntime = 2;

// Entry point of the `pace` tool. Exit codes: 0 success, 1 usage or config
// error, 2 runtime abort.
int run_cli(int argc, char** argv);

}  // namespace pace::cli
