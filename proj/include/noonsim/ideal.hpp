#pragma once

#include <vector>

#include "noonsim/schedule.hpp"

namespace noonsim {

/// Exact sparse unitary for one schedule segment: a set of two-state
/// rotations |lo> -> factor|hi>, |hi> -> factor|lo>, plus diagonal phases,
/// identity everywhere else.
///
/// A swap gate is rung-selective by construction: it touches only the pair
/// of Fock levels the segment targets, while the physical resonant coupling
/// acts on every rung at once. That is only equivalent when the incoming
/// state has no amplitude on the other rungs, so `silent` records the basis
/// states the physical segment would mix but this gate ignores, and
/// require_support() asserts they are empty before the gate is applied.
struct IdealGate {
  struct PairMap {
    Eigen::Index lo = 0;
    Eigen::Index hi = 0;
    Complex factor{0.0, 0.0};
  };

  Eigen::Index dim = 0;
  std::vector<PairMap> pairs;
  Vec diagonal;                        ///< size dim; ones unless phases are applied
  std::vector<Eigen::Index> silent;    ///< must carry no amplitude (see above)
  std::string label;

  Vec apply(const Vec& state) const;
  void require_support(const Vec& state, double tol) const;
  Mat matrix() const;                  ///< dense form, for tests
};

/// Resonant pi pulse on one transition: |lo> -> -i|hi>, |hi> -> -i|lo> for
/// every Fock label, identity on the third level.
IdealGate ideal_pi_pulse(Transition t, const SpaceConfig& cfg);

/// Full-transfer resonant exchange on one rung of one resonator:
/// |upper, n-1> -> -i|lower, n> and back, identity elsewhere.
IdealGate ideal_swap(Resonator r, Transition t, int rung, const SpaceConfig& cfg);

/// Instantaneous diagonal phases diag(e^{i theta_g}, e^{i theta_e}, 1) on
/// the qutrit.
IdealGate ideal_phase_correction(double theta_g, double theta_e, const SpaceConfig& cfg);

IdealGate ideal_gate(const ScheduleSegment& seg, const SpaceConfig& cfg);

/// (|g> + |e>)/sqrt(2) (x) |0,0>, the state every run starts from.
Vec initial_state(const SpaceConfig& cfg);

/// (|N,0> + |0,M>)/sqrt(2) (x) |g>, the target including the factored-out
/// qutrit.
Vec noon_target(int n_target, int m_target, const SpaceConfig& cfg);

/// Compose the ideal gates over a compiled segment list, asserting the
/// rung-support condition before every swap. Element k is the state at
/// boundary k (k = 0 is the initial state).
std::vector<Vec> expected_boundary_states(const ProtocolSpec& spec,
                                          const std::vector<ScheduleSegment>& segments,
                                          const SpaceConfig& cfg);

const Vec& expected_state(const Schedule& schedule, std::size_t boundary);

}  // namespace noonsim
