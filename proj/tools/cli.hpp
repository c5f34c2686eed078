#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sfcli {

// Exit codes.
inline constexpr int kPass = 0;
inline constexpr int kFail = 1;   // a mathematical check failed
inline constexpr int kUsage = 2;  // bad arguments, I/O, resource limits

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sfcli
