#include "noonsim/hamiltonian.hpp"

#include <cmath>

#include "noonsim/errors.hpp"

namespace noonsim {

Mat build_free(const DeviceParams& p, const SegmentTuning& t, const SpaceConfig& cfg) {
  cfg.validate();
  const double energy_e = p.omega_ge;
  const double energy_a = p.omega_ge + p.omega_ea;
  Mat h = Mat::Zero(cfg.dim(), cfg.dim());
  h += energy_e * lift(level_projector(Level::e), Slot::qutrit, cfg);
  h += energy_a * lift(level_projector(Level::a), Slot::qutrit, cfg);
  h += t.omega_r1 * lift(number_operator(cfg.d1), Slot::r1, cfg);
  h += t.omega_r2 * lift(number_operator(cfg.d2), Slot::r2, cfg);
  return h;
}

namespace {

Mat coupling_term(Resonator r, Transition t, double g, const SpaceConfig& cfg) {
  const Slot slot = r == Resonator::r1 ? Slot::r1 : Slot::r2;
  const int d = r == Resonator::r1 ? cfg.d1 : cfg.d2;
  const Mat exchange =
      lift(creation(d), slot, cfg) * lift(transition_lowering(t), Slot::qutrit, cfg);
  return g * (exchange + exchange.adjoint());
}

}  // namespace

Mat build_static(const DeviceParams& p, const SegmentTuning& t, const SpaceConfig& cfg) {
  Mat h = build_free(p, t, cfg);
  if (t.g1_ge_on) h += coupling_term(Resonator::r1, Transition::ge, p.g1_ge, cfg);
  if (t.g1_ea_on) h += coupling_term(Resonator::r1, Transition::ea, p.g1_ea, cfg);
  if (t.g2_ge_on) h += coupling_term(Resonator::r2, Transition::ge, p.g2_ge, cfg);
  if (t.g2_ea_on) h += coupling_term(Resonator::r2, Transition::ea, p.g2_ea, cfg);
  if (!is_hermitian(h, 1e-12)) {
    throw integrity_error("assembled static Hamiltonian is not Hermitian");
  }
  return h;
}

Mat build_drive(Transition t, double amplitude, double phase, const SpaceConfig& cfg) {
  if (amplitude < 0.0) {
    throw std::invalid_argument("drive amplitude must be nonnegative");
  }
  const Mat raise = lift(transition_raising(t), Slot::qutrit, cfg);
  const Complex half_amp = 0.5 * amplitude * std::exp(Complex(0.0, -phase));
  Mat h = half_amp * raise;
  h += (half_amp * raise).adjoint().eval();
  return h;
}

Mat to_rotating_frame(const Mat& h, const Mat& generator) {
  if (h.rows() != generator.rows() || h.cols() != generator.cols()) {
    throw std::invalid_argument("frame generator dimension mismatch");
  }
  Mat off = generator;
  off.diagonal().setZero();
  const double scale = std::max(1.0, generator.cwiseAbs().maxCoeff());
  if (off.cwiseAbs().maxCoeff() > 1e-14 * scale) {
    throw std::invalid_argument("unsupported frame: generator must be diagonal in the declared basis");
  }
  return h - generator;
}

Mat excitation_number(const SpaceConfig& cfg) {
  Mat n = lift(number_operator(cfg.d1), Slot::r1, cfg);
  n += lift(number_operator(cfg.d2), Slot::r2, cfg);
  n += lift(level_projector(Level::e), Slot::qutrit, cfg);
  n += 2.0 * lift(level_projector(Level::a), Slot::qutrit, cfg);
  return n;
}

}  // namespace noonsim
