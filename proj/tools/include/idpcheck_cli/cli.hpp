#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace idpcheck::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitUndecided = 3;

/// Runs one command line (without the program name). Reports go to `out`,
/// warnings and errors to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace idpcheck::cli
