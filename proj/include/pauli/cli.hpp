#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pauli::cli {

inline constexpr int kExitOk = 0;
// Parse errors, violated preconditions and failed verifications.
inline constexpr int kExitContract = 1;
// Inputs beyond a dense or enumeration cap.
inline constexpr int kExitSize = 2;

// Runs one subcommand. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pauli::cli
