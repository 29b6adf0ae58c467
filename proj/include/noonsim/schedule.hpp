#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "noonsim/hilbert.hpp"
#include "noonsim/params.hpp"

namespace noonsim {

/// Photon targets: N photons loaded into r1 on one superposition branch,
/// M photons into r2 on the other. N = M is allowed.
struct ProtocolSpec {
  int n_target = 1;
  int m_target = 1;

  void validate() const;
};

enum class SegmentKind : int { drive_pulse = 0, swap = 1, phase_correction = 2 };

std::string segment_kind_name(SegmentKind k);

struct ScheduleSegment {
  SegmentKind kind = SegmentKind::drive_pulse;
  Transition transition = Transition::ea;  ///< drive_pulse and swap
  Resonator resonator = Resonator::r1;     ///< swap only
  int rung = 0;                            ///< swap only: photon number being added
  double amplitude = 0.0;                  ///< drive_pulse: Rabi rate, rad/s
  double phase = 0.0;                      ///< drive_pulse: drive phase, rad
  double theta_g = 0.0;                    ///< phase_correction: phase on |g>
  double theta_e = 0.0;                    ///< phase_correction: phase on |e>
  double duration = 0.0;                   ///< seconds; exactly 0 for phase_correction
  std::string stage;                       ///< checkpoint label of the state after this segment
};

/// Closed-form operation-time bookkeeping next to the actual compiled total.
/// The closed-form drive term counts j pi/Omega per step and therefore grows
/// quadratically with the step index, while the compiled schedule spends one
/// pi pulse per step; both figures are reported and `totals_differ` flags the
/// mismatch rather than hiding it.
struct TimingReport {
  double drive_time_first = 0.0;   ///< closed form, r1-loading part, s
  double swap_time_first = 0.0;
  double drive_time_second = 0.0;  ///< closed form, r2-loading part, s
  double swap_time_second = 0.0;
  double schedule_sum = 0.0;       ///< sum of compiled segment durations, s
  double closed_form_total = 0.0;  ///< sum of the four closed-form pieces, s
  bool totals_differ = false;
};

struct Schedule {
  ProtocolSpec spec;
  SpaceConfig space;
  std::vector<ScheduleSegment> segments;
  /// Ideal-composition state at every segment boundary (size segments+1).
  std::vector<Vec> expected_states;
  TimingReport timing;

  const std::string& boundary_stage(std::size_t boundary) const;
};

/// Diagonal phases (theta_g, theta_e) applied to |g>, |e> just before the
/// final swap. They cancel the branch factors accumulated by the pulses and
/// swaps so the final swap lands on the target state with coefficient +1
/// on the r1 branch and +1 on the r2 branch.
std::pair<double, double> phase_correction_angles(int n_target, int m_target);

TimingReport timing(const ProtocolSpec& spec, const DeviceParams& p);

Schedule compile(const ProtocolSpec& spec, const DeviceParams& p);
Schedule compile(const ProtocolSpec& spec, const DeviceParams& p, const SpaceConfig& cfg);

/// Stable CSV export: one row per segment with kind, parameters, duration,
/// cumulative time and the expected-state label. Field names documented in
/// the README and kept stable.
void write_schedule_csv(const Schedule& s, std::ostream& os);

}  // namespace noonsim
