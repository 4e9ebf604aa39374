#pragma once

#include "duet_cli/config.hpp"
#include "duet_cli/table.hpp"

namespace duet::cli {

/// Frequencies for spectral tasks (uniform, or adaptive when points == 0).
std::vector<double> frequency_grid(const RunConfig& config);

/// Runs config.task and returns its table. Library errors propagate:
/// InvalidParameter, ConvergenceError, PhysicalityError, SingularResponse.
Table compute_task(const RunConfig& config);

/// compute_task followed by writing config.output.
void run_task(const RunConfig& config);

/// Process exit status for an exception escaping run_task: 1 configuration,
/// 2 numerical non-convergence, 3 physicality violation.
int exit_code_for(const std::exception& error);

}  // namespace duet::cli
