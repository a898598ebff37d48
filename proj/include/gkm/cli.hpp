#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace gkm::cli {

// Exit codes.
inline constexpr int kOk = 0;            // success / answer is yes
inline constexpr int kNegative = 1;      // computed negative answer
inline constexpr int kInputError = 2;    // malformed input or usage
inline constexpr int kInconsistent = 3;  // data cannot come from a GKM action

// args excludes the program name. Results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// 64-bit FNV-1a, printed as 16 hex digits.
std::string digest(std::string_view text);

}  // namespace gkm::cli
