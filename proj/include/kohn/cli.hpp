#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kohn::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitCheckFailed = 3;

/// Runs the `kohn_lens` command line. args excludes the program name.
/// Returns the process exit code; all normal output goes to `out`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace kohn::cli
