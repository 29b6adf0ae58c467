#pragma once

#include <string>
#include <vector>

#include "noonsim/dynamics.hpp"
#include "noonsim/hilbert.hpp"
#include "noonsim/schedule.hpp"

namespace noonsim {

/// Squared overlap |<target|state>|^2. Symmetric and insensitive to global
/// phases on either argument.
double fidelity(const Vec& state, const Vec& target);

enum class Subsystem : int { qutrit = 0, r1 = 1, r2 = 2, field = 3 };

/// Partial trace over the complementary subsystems. `field` keeps the joint
/// r1 (x) r2 state with flat index n1*d2 + n2.
Mat reduced_state(const Vec& state, Subsystem s, const SpaceConfig& cfg);

double purity(const Mat& rho);

/// P(n) for one resonator; sums to 1 for a normalized state.
Eigen::VectorXd photon_statistics(const Vec& state, Resonator r, const SpaceConfig& cfg);

Eigen::VectorXd level_populations(const Vec& state, const SpaceConfig& cfg);

double mean_photons(const Vec& state, Resonator r, const SpaceConfig& cfg);

/// Total weight above the protocol's highest intended Fock levels; a
/// truncation-sufficiency witness, not a correction.
double guard_population(const Vec& state, const SpaceConfig& cfg, int n_target, int m_target);

struct RunReport {
  int n_target = 0;
  int m_target = 0;
  std::string mode;
  double delta_over_g = 0.0;
  int d1 = 0;
  int d2 = 0;
  DeviceParams params;
  TimingReport timing;
  double final_fidelity = 0.0;        ///< vs target including the qutrit factor
  double field_fidelity = 0.0;        ///< qutrit traced out first
  double qutrit_purity_final = 0.0;
  std::vector<double> per_boundary_fidelity;  ///< vs the ideal composition
  double max_boundary_deviation = 0.0;        ///< max elementwise |state - ideal|
  Eigen::VectorXd photon_distribution_r1;
  Eigen::VectorXd photon_distribution_r2;
  double max_norm_drift = 0.0;
  double max_swap_excitation_drift = 0.0;
  double max_guard_population = 0.0;
};

RunReport build_report(const Schedule& schedule, const Trajectory& traj, const RunConfig& rc,
                       const DeviceParams& p);

}  // namespace noonsim
