#pragma once

#include <iosfwd>

#include "noonsim/analysis.hpp"
#include "noonsim/config.hpp"

namespace noonsim {

/// JSON report with a fixed key order and every number printed with 12
/// significant digits, so identical configurations produce byte-identical
/// files.
void write_report_json(const RunReport& report, std::ostream& os);

void write_trajectory_csv(const Trajectory& traj, const Schedule& schedule,
                          TrajectoryFormat format, std::ostream& os);

}  // namespace noonsim
