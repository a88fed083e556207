#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace treeph {

// Exit codes: 0 ok, 2 usage, 3 parse, 4 dimension/shape, 5 internal.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitParse = 3;
inline constexpr int kExitDimension = 4;
inline constexpr int kExitInternal = 5;

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv);

} // namespace treeph
