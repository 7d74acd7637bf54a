#pragma once

#include <ostream>

namespace starcomp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitEmpty = 2;  // infeasible input or no solutions

/// The whole command line front end. Reports go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace starcomp::cli
