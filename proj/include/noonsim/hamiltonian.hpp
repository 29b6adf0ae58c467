#pragma once

#include <string>

#include "noonsim/hilbert.hpp"
#include "noonsim/params.hpp"

namespace noonsim {

/// Per-segment effective device tuning. Frequency tuning is treated as
/// instantaneous between segments; within a segment everything is constant.
/// Couplings that a segment switches off (the idealized far-detuned limit)
/// are flagged here instead of being modelled as literal detunings.
struct SegmentTuning {
  double omega_r1 = 0.0;
  double omega_r2 = 0.0;
  bool g1_ge_on = true;
  bool g1_ea_on = true;
  bool g2_ge_on = true;
  bool g2_ea_on = true;
};

/// Hermitian generator of one time-independent schedule segment, expressed
/// in the rotating frame named by `frame`. `frame_diagonal` holds the
/// residual free-evolution diagonal of that frame; the propagator undoes it
/// after the segment so that boundary states carry no deterministic
/// free-evolution phases (they are absorbed into the control phase
/// references, which is also the convention the closed-form checkpoint
/// states use). It is identically zero in the ideal mode.
struct SegmentHamiltonian {
  Mat matrix;
  Eigen::VectorXd frame_diagonal;
  std::string frame;
  double duration = 0.0;  ///< seconds
};

/// Free (uncoupled) part: level energies plus photon energies, diagonal.
/// The g level is the zero of energy.
Mat build_free(const DeviceParams& p, const SegmentTuning& t, const SpaceConfig& cfg);

/// Full static lab-frame Hamiltonian for one segment: free part plus the
/// active resonator-qutrit exchange couplings.
Mat build_static(const DeviceParams& p, const SegmentTuning& t, const SpaceConfig& cfg);

/// Classical drive on one qutrit transition, already in the frame rotating
/// at the (resonant) drive frequency: (amplitude/2) (e^{-i phase} raise +
/// e^{+i phase} lower). A pulse of duration pi/amplitude is a pi pulse;
/// phase 0 maps the lower level to -i times the upper one.
Mat build_drive(Transition t, double amplitude, double phase, const SpaceConfig& cfg);

/// Interaction-picture transform at segment start for a diagonal frame
/// generator: H' = H - G. Non-diagonal generators are not supported.
Mat to_rotating_frame(const Mat& h, const Mat& generator);

/// Total excitation operator n1 + n2 + |e><e| + 2|a><a|. Commutes with the
/// undriven static Hamiltonian; conserved through swap segments.
Mat excitation_number(const SpaceConfig& cfg);

}  // namespace noonsim
