#include "noonsim/params.hpp"

#include <cmath>

#include "noonsim/errors.hpp"

namespace noonsim {

double DeviceParams::coupling(Resonator r, Transition t) const {
  if (r == Resonator::r1) return t == Transition::ge ? g1_ge : g1_ea;
  return t == Transition::ge ? g2_ge : g2_ea;
}

double DeviceParams::max_coupling() const {
  return std::max(std::max(g1_ge, g1_ea), std::max(g2_ge, g2_ea));
}

void DeviceParams::validate() const {
  const double values[] = {omega_ge, omega_ea, omega_r1,       omega_r2,       g1_ge,
                           g1_ea,    g2_ge,    g2_ea,          omega_drive_ge, omega_drive_ea};
  for (double v : values) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw config_error("device parameters must all be finite and strictly positive");
    }
  }
  if (anharmonicity() == 0.0) {
    throw config_error("the two qutrit transitions must have distinct frequencies");
  }
}

DeviceParams DeviceParams::typical() {
  DeviceParams p;
  p.omega_ge = hz_to_angular(5.0e9);
  p.omega_ea = hz_to_angular(5.5e9);
  p.g1_ge = p.g1_ea = p.g2_ge = p.g2_ea = hz_to_angular(50.0e6);
  p.omega_drive_ge = p.omega_drive_ea = hz_to_angular(25.0e6);
  p.omega_r1 = p.omega_r2 = p.omega_ea;
  return p;
}

double DeviceParams::hz_to_angular(double f_hz) { return 2.0 * M_PI * f_hz; }

}  // namespace noonsim
