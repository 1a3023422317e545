#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tsw::cli {

// Exit codes.
inline constexpr int kYes = 0;
inline constexpr int kNo = 1;  // also: invalid input or solution
inline constexpr int kUsage = 2;
inline constexpr int kResource = 3;

// Runs the tool on argv[1..]; args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace tsw::cli
