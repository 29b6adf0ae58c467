#pragma once

#include "noonsim/hilbert.hpp"

namespace noonsim {

/// Device constants in angular units (rad/s). Configuration files take
/// ordinary frequencies in Hz; the conversion omega = 2*pi*f happens once at
/// the configuration boundary and is echoed in every report.
struct DeviceParams {
  double omega_ge = 0.0;  ///< g<->e transition frequency
  double omega_ea = 0.0;  ///< e<->a transition frequency
  double omega_r1 = 0.0;  ///< idle resonator frequencies; segments retune them
  double omega_r2 = 0.0;
  double g1_ge = 0.0;  ///< resonator-qutrit coupling strengths
  double g1_ea = 0.0;
  double g2_ge = 0.0;
  double g2_ea = 0.0;
  double omega_drive_ge = 0.0;  ///< drive Rabi amplitudes
  double omega_drive_ea = 0.0;

  /// Spacing between the two ladder transitions; must be nonzero so the
  /// drives can address one transition at a time.
  double anharmonicity() const { return omega_ea - omega_ge; }

  double transition_frequency(Transition t) const {
    return t == Transition::ge ? omega_ge : omega_ea;
  }
  double coupling(Resonator r, Transition t) const;
  double drive_amplitude(Transition t) const {
    return t == Transition::ge ? omega_drive_ge : omega_drive_ea;
  }
  double max_coupling() const;

  void validate() const;

  /// Representative circuit-QED magnitudes: couplings 2*pi*50 MHz,
  /// anharmonicity 2*pi*500 MHz, drive amplitudes 2*pi*25 MHz.
  static DeviceParams typical();

  static double hz_to_angular(double f_hz);
};

}  // namespace noonsim
