#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace evoc {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitIo = 2;
inline constexpr int kExitOracle = 3;

/// Entry point of the evoc command line; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace evoc
