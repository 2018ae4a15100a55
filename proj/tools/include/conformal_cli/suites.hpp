#pragma once

// Seeded verification suites behind `verify`. Each suite is a list of named
// checks; every check draws from its own sampler, seeded from the run seed
// and the check name, so results do not depend on scheduling.

#include <string>
#include <vector>

#include "conformal_cli/config.hpp"
#include "conformal_cli/report.hpp"

namespace conformal::cli {

/// halfplane, disk, su22, tube, spacetime in sorted order.
const std::vector<std::string>& suite_names();

/// Expands "all", removes duplicates and sorts. UnknownSuite for anything
/// else outside suite_names().
std::vector<std::string> resolve_suites(const std::vector<std::string>& requested);

/// Check names of one suite, in report order.
std::vector<std::string> check_names(const std::string& suite);

/// Runs the suites concurrently and concatenates their reports in suite-name
/// order.
std::vector<SuiteReport> run_suites(const std::vector<std::string>& suites, const RunConfig& cfg);

}  // namespace conformal::cli
