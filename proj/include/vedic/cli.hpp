#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace vedic::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsageError = 2;

// Runs one command line (without the program name). Results go to `out`,
// diagnostics to `err`. Returns 0 on success, 1 on arithmetic or domain
// errors, 2 on usage errors.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace vedic::cli
