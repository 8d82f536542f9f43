#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lftcalc {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitNonProductive = 3;
inline constexpr int kExitInternal = 70;

/// Runs the calculator on `args` (without the program name) and returns the
/// process exit code.
int run_app(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace lftcalc
