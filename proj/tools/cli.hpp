#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nearvec::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kUsageError = 2;

// Runs the nearvec command line. `args` excludes the program name. Matrix
// file arguments may be "-" to read from `in`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream& in);

}  // namespace nearvec::cli
