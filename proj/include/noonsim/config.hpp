#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "noonsim/dynamics.hpp"
#include "noonsim/params.hpp"
#include "noonsim/schedule.hpp"

namespace noonsim {

enum class TrajectoryFormat : int { populations = 0, amplitudes = 1 };

struct OutputOptions {
  std::string directory = "out";
  TrajectoryFormat trajectory_format = TrajectoryFormat::populations;
};

/// Optional sweep block: exactly one of the two lists may be non-empty.
struct SweepSpec {
  std::vector<double> delta_over_g;
  std::vector<std::pair<int, int>> protocol;

  bool active() const { return !delta_over_g.empty() || !protocol.empty(); }
};

/// Fully resolved run configuration. Parsed strictly: unknown keys are
/// errors, every frequency in the file is an ordinary frequency in Hz and is
/// converted to angular units (omega = 2*pi*f) here and nowhere else.
struct RunConfigFile {
  ProtocolSpec protocol;
  DeviceParams device = DeviceParams::typical();
  RunConfig run;
  std::optional<SpaceConfig> space_override;
  OutputOptions output;
  SweepSpec sweep;

  SpaceConfig space_for(const ProtocolSpec& spec) const;
  void validate() const;
};

RunConfigFile load_config(const std::string& path);
RunConfigFile parse_config_text(const std::string& text);

struct CliOverrides {
  std::optional<int> n_target;
  std::optional<int> m_target;
  std::optional<std::string> mode;
  std::optional<double> delta_over_g;
  std::optional<std::string> output_directory;
};

void apply_overrides(RunConfigFile& cfg, const CliOverrides& ov);

}  // namespace noonsim
