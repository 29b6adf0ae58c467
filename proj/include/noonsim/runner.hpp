#pragma once

#include <iosfwd>

#include "noonsim/config.hpp"

namespace noonsim {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitPhysicsError = 3;

/// Compile, propagate and serialize every configured entry (single run or
/// sweep). Writes report.json, trajectory.csv and schedule.csv per entry
/// plus sweep_index.csv for sweeps. Returns a process exit code.
int run_command(const RunConfigFile& cfg, std::ostream& log);

/// Ideal-mode equivalence check of the propagated boundary states against
/// the ideal composition, plus the conservation suite. Prints a per-boundary
/// deviation table. Returns a process exit code.
int verify_command(const RunConfigFile& cfg, std::ostream& log);

}  // namespace noonsim
