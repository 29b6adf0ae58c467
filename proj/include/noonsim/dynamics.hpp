#pragma once

#include <string>
#include <vector>

#include "noonsim/hamiltonian.hpp"
#include "noonsim/schedule.hpp"

namespace noonsim {

/// How literally the far-detuned "interaction off" limit is modelled.
/// `ideal` zeroes the detuned couplings and keeps every segment exactly on
/// resonance; `finite_detuning` keeps all couplings on and parks off-duty
/// resonators a finite distance delta above the highest transition.
enum class Mode : int { ideal = 0, finite_detuning = 1 };

std::string mode_name(Mode m);
Mode mode_from_name(const std::string& name);

struct RunConfig {
  Mode mode = Mode::ideal;
  double delta_over_g = 100.0;   ///< parking detuning in units of the largest coupling
  int samples_per_segment = 32;  ///< intra-segment trajectory samples
  double norm_tolerance = 1e-10;

  void validate() const;
};

struct TrajectorySample {
  double time = 0.0;  ///< cumulative schedule time, s
  Vec state;
};

struct Trajectory {
  std::vector<Vec> boundary_states;  ///< segment count + 1; first is the initial state
  std::vector<double> boundary_times;
  std::vector<TrajectorySample> samples;  ///< boundaries plus intra-segment points
  double max_norm_drift = 0.0;
  double max_swap_excitation_drift = 0.0;  ///< |<N_exc>(t) - <N_exc>(start)| within swaps
  double max_guard_population = 0.0;       ///< total weight above the protocol Fock targets
};

/// Effective frequencies and active couplings for one segment under a mode.
SegmentTuning segment_tuning(const ScheduleSegment& seg, const DeviceParams& p,
                             const RunConfig& rc);

/// Time-independent rotating-frame generator for one segment. Throws for
/// phase-correction segments, which are applied as exact diagonal unitaries.
SegmentHamiltonian make_segment_hamiltonian(const ScheduleSegment& seg, const DeviceParams& p,
                                            const RunConfig& rc, const SpaceConfig& cfg);

/// Exact propagation exp(-i H t) |state> through a Hermitian segment
/// generator (eigendecomposition), followed by the frame's diagonal
/// unwinding. Norm is checked against `norm_tolerance`.
Vec propagate_segment(const Vec& state, const SegmentHamiltonian& h, double duration,
                      double norm_tolerance = 1e-10);

Trajectory run_schedule(const Vec& initial, const Schedule& schedule, const RunConfig& rc,
                        const DeviceParams& p);

/// Re-integrate the same schedule with a classical fourth-order stepper of
/// step dt and return the maximum elementwise deviation from the exact
/// propagator's boundary states.
double cross_validate(const Vec& initial, const Schedule& schedule, const RunConfig& rc,
                      const DeviceParams& p, double dt);

}  // namespace noonsim
