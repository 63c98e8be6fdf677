#pragma once

#include <iosfwd>

#include "cocyclelab/parse.hpp"
#include "cocyclelab/report.hpp"

namespace cocyclelab {

// Executes one command against a parsed problem. Commands: two-form,
// decompose, momenta, cocycle, sigma, prop2, residual, reconcile, jacobi,
// trivial, oracle.
Report run_command(const std::string& command, const ProblemSpec& spec);

// Full command-line entry point (args exclude the program name).
// Exit codes: 0 all checks pass, 1 failed checks, 2 input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cocyclelab
