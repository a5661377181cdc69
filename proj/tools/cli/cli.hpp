#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hyperlat::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitDomain = 2;

// args[0] is the program name. Output documents go to `out` unless --output
// is given; usage text and error documents go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyperlat::cli
