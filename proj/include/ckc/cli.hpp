#pragma once

#include <iosfwd>

namespace ckc::cli {

enum ExitCode : int { kOk = 0, kInfeasible = 1, kUsage = 2, kInvariant = 3 };

/// Entry point of the ckc tool. Machine-readable results go to `out` (or
/// --out FILE), diagnostics to `err`.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace ckc::cli
