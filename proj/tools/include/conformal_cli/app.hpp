#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace conformal::cli {

enum ExitCode : int { kExitPass = 0, kExitFailure = 1, kExitUsage = 2 };

/// Entry point behind the executable. `args` excludes the program name;
/// `env_seed` is the value of CONFORMAL_COHERENT_SEED or nullptr.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const char* env_seed);

}  // namespace conformal::cli
