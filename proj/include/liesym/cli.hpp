#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace liesym::cli {

// Exit codes: 0 success / fixtures pass; 1 verified but fixture delta;
// 2 algebra error; 3 unsupported algebra; 64 usage.
inline constexpr int kOk = 0;
inline constexpr int kDelta = 1;
inline constexpr int kAlgebraError = 2;
inline constexpr int kUnsupported = 3;
inline constexpr int kUsage = 64;

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace liesym::cli
