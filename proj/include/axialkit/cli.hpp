#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace axialkit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFinding = 1;  // axis failure in validate, conjecture flag in explore
inline constexpr int kExitError = 2;    // usage, parse and I/O errors

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace axialkit::cli
