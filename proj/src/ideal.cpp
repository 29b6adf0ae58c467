#include "noonsim/ideal.hpp"

#include <cmath>

#include "noonsim/errors.hpp"

namespace noonsim {

Vec IdealGate::apply(const Vec& state) const {
  if (state.size() != dim) {
    throw std::invalid_argument("ideal gate dimension mismatch");
  }
  Vec out = state;
  for (const auto& p : pairs) {
    out(p.lo) = p.factor * state(p.hi);
    out(p.hi) = p.factor * state(p.lo);
  }
  if (diagonal.size() == dim) out = diagonal.cwiseProduct(out);
  return out;
}

void IdealGate::require_support(const Vec& state, double tol) const {
  for (Eigen::Index i : silent) {
    if (std::abs(state(i)) > tol) {
      throw integrity_error("ideal gate '" + label + "' applied to a state with amplitude " +
                            std::to_string(std::abs(state(i))) +
                            " outside its support (index " + std::to_string(i) + ")");
    }
  }
}

Mat IdealGate::matrix() const {
  Mat m = Mat::Identity(dim, dim);
  for (const auto& p : pairs) {
    m(p.lo, p.lo) = 0.0;
    m(p.hi, p.hi) = 0.0;
    m(p.lo, p.hi) = p.factor;
    m(p.hi, p.lo) = p.factor;
  }
  if (diagonal.size() == dim) m = diagonal.asDiagonal() * m;
  return m;
}

IdealGate ideal_pi_pulse(Transition t, const SpaceConfig& cfg) {
  cfg.validate();
  IdealGate gate;
  gate.dim = cfg.dim();
  gate.label = "pi_pulse_" + transition_name(t);
  const Level lo = lower_level(t);
  const Level hi = upper_level(t);
  for (int n1 = 0; n1 < cfg.d1; ++n1) {
    for (int n2 = 0; n2 < cfg.d2; ++n2) {
      gate.pairs.push_back({basis_index({lo, n1, n2}, cfg), basis_index({hi, n1, n2}, cfg),
                            Complex(0.0, -1.0)});
    }
  }
  return gate;
}

IdealGate ideal_swap(Resonator r, Transition t, int rung, const SpaceConfig& cfg) {
  cfg.validate();
  const int d = r == Resonator::r1 ? cfg.d1 : cfg.d2;
  if (rung < 1 || rung > d - 1) {
    throw std::out_of_range("swap rung " + std::to_string(rung) + " does not fit in " +
                            resonator_name(r) + " truncation d=" + std::to_string(d));
  }
  IdealGate gate;
  gate.dim = cfg.dim();
  gate.label = "swap_" + resonator_name(r) + "_" + transition_name(t) + "_rung" +
               std::to_string(rung);
  const Level lo = lower_level(t);
  const Level hi = upper_level(t);

  const auto make_label = [&](Level l, int own, int other) {
    return r == Resonator::r1 ? BasisLabel{l, own, other} : BasisLabel{l, other, own};
  };
  const int d_other = r == Resonator::r1 ? cfg.d2 : cfg.d1;

  for (int other = 0; other < d_other; ++other) {
    gate.pairs.push_back({basis_index(make_label(hi, rung - 1, other), cfg),
                          basis_index(make_label(lo, rung, other), cfg), Complex(0.0, -1.0)});
    // Everything else the resonant exchange would rotate: upper-level states
    // on the wrong rung, lower-level states with the wrong photon number.
    for (int n = 0; n < d; ++n) {
      if (n != rung - 1) {
        gate.silent.push_back(basis_index(make_label(hi, n, other), cfg));
      }
      if (n >= 1 && n != rung) {
        gate.silent.push_back(basis_index(make_label(lo, n, other), cfg));
      }
    }
  }
  return gate;
}

IdealGate ideal_phase_correction(double theta_g, double theta_e, const SpaceConfig& cfg) {
  cfg.validate();
  IdealGate gate;
  gate.dim = cfg.dim();
  gate.label = "phase_correction";
  gate.diagonal = Vec::Ones(cfg.dim());
  for (int n1 = 0; n1 < cfg.d1; ++n1) {
    for (int n2 = 0; n2 < cfg.d2; ++n2) {
      gate.diagonal(basis_index({Level::g, n1, n2}, cfg)) = std::exp(Complex(0.0, theta_g));
      gate.diagonal(basis_index({Level::e, n1, n2}, cfg)) = std::exp(Complex(0.0, theta_e));
    }
  }
  return gate;
}

IdealGate ideal_gate(const ScheduleSegment& seg, const SpaceConfig& cfg) {
  switch (seg.kind) {
    case SegmentKind::drive_pulse: return ideal_pi_pulse(seg.transition, cfg);
    case SegmentKind::swap: return ideal_swap(seg.resonator, seg.transition, seg.rung, cfg);
    case SegmentKind::phase_correction:
      return ideal_phase_correction(seg.theta_g, seg.theta_e, cfg);
  }
  throw std::invalid_argument("unknown segment kind");
}

Vec initial_state(const SpaceConfig& cfg) {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  Vec v = Vec::Zero(cfg.dim());
  v(basis_index({Level::g, 0, 0}, cfg)) = inv_sqrt2;
  v(basis_index({Level::e, 0, 0}, cfg)) = inv_sqrt2;
  return v;
}

Vec noon_target(int n_target, int m_target, const SpaceConfig& cfg) {
  cfg.require_protocol_fit(n_target, m_target);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  Vec v = Vec::Zero(cfg.dim());
  v(basis_index({Level::g, n_target, 0}, cfg)) = inv_sqrt2;
  v(basis_index({Level::g, 0, m_target}, cfg)) = inv_sqrt2;
  return v;
}

std::vector<Vec> expected_boundary_states(const ProtocolSpec& spec,
                                          const std::vector<ScheduleSegment>& segments,
                                          const SpaceConfig& cfg) {
  spec.validate();
  cfg.require_protocol_fit(spec.n_target, spec.m_target);
  std::vector<Vec> states;
  states.reserve(segments.size() + 1);
  states.push_back(initial_state(cfg));
  for (const auto& seg : segments) {
    const IdealGate gate = ideal_gate(seg, cfg);
    gate.require_support(states.back(), 1e-12);
    states.push_back(gate.apply(states.back()));
  }
  return states;
}

const Vec& expected_state(const Schedule& schedule, std::size_t boundary) {
  if (boundary >= schedule.expected_states.size()) {
    throw std::out_of_range("boundary index " + std::to_string(boundary) +
                            " out of range for a schedule with " +
                            std::to_string(schedule.segments.size()) + " segments");
  }
  return schedule.expected_states[boundary];
}

}  // namespace noonsim
