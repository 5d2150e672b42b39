#pragma once

#include "phasebench/roughp.hpp"

#include <iosfwd>

namespace phasebench {

enum ExitCode : int {
    kExitPass = 0,
    kExitViolation = 1,
    kExitConfig = 2,
    kExitInfeasible = 3,
};

/// Replaceable internals, for negative-control builds.
struct CliHooks {
    QPrimeFn tieBreak = qprime;
};

/// Entry point of the phasebench tool: lemmas | scan | iso | density.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err, const CliHooks& hooks = {});

} // namespace phasebench
