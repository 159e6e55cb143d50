#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stbcsm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitRuntime = 3;

/// Entry point shared by the executable and the tests. Subcommands:
/// run, figure, optimize-theta.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stbcsm::cli
