#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace colour_lab::cli {

// Exit codes.
inline constexpr int ok = 0;
inline constexpr int negative = 1;  // unsat, refuted, invalid witness
inline constexpr int usage = 2;
inline constexpr int budget = 3;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace colour_lab::cli
