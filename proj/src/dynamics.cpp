#include "noonsim/dynamics.hpp"

#include <cmath>

#include "noonsim/errors.hpp"
#include "noonsim/ideal.hpp"

namespace noonsim {

std::string mode_name(Mode m) {
  return m == Mode::ideal ? "ideal" : "finite_detuning";
}

Mode mode_from_name(const std::string& name) {
  if (name == "ideal") return Mode::ideal;
  if (name == "finite_detuning") return Mode::finite_detuning;
  throw config_error("unknown mode '" + name + "' (expected 'ideal' or 'finite_detuning')");
}

void RunConfig::validate() const {
  if (mode == Mode::finite_detuning && !(delta_over_g > 0.0)) {
    throw config_error("finite-detuning mode needs delta_over_g > 0");
  }
  if (samples_per_segment < 1) {
    throw config_error("samples_per_segment must be >= 1");
  }
  if (!(norm_tolerance > 0.0)) {
    throw config_error("norm_tolerance must be positive");
  }
}

SegmentTuning segment_tuning(const ScheduleSegment& seg, const DeviceParams& p,
                             const RunConfig& rc) {
  const double delta = rc.delta_over_g * p.max_coupling();
  const double parked = std::max(p.omega_ge, p.omega_ea) + delta;

  SegmentTuning t;
  t.omega_r1 = parked;
  t.omega_r2 = parked;
  if (seg.kind == SegmentKind::swap) {
    const double resonant = p.transition_frequency(seg.transition);
    (seg.resonator == Resonator::r1 ? t.omega_r1 : t.omega_r2) = resonant;
  }

  if (rc.mode == Mode::ideal) {
    // Far detuning taken literally: only the resonant coupling survives.
    t.g1_ge_on = t.g1_ea_on = t.g2_ge_on = t.g2_ea_on = false;
    if (seg.kind == SegmentKind::swap) {
      if (seg.resonator == Resonator::r1) {
        (seg.transition == Transition::ge ? t.g1_ge_on : t.g1_ea_on) = true;
        t.omega_r2 = p.transition_frequency(seg.transition);  // decoupled; keep the frame trivial
      } else {
        (seg.transition == Transition::ge ? t.g2_ge_on : t.g2_ea_on) = true;
        t.omega_r1 = p.transition_frequency(seg.transition);
      }
    }
  }
  return t;
}

namespace {

Mat coupling_only(const DeviceParams& p, const SegmentTuning& t, const SpaceConfig& cfg) {
  SegmentTuning free_t = t;
  free_t.g1_ge_on = free_t.g1_ea_on = free_t.g2_ge_on = free_t.g2_ea_on = false;
  return build_static(p, t, cfg) - build_free(p, free_t, cfg);
}

}  // namespace

SegmentHamiltonian make_segment_hamiltonian(const ScheduleSegment& seg, const DeviceParams& p,
                                            const RunConfig& rc, const SpaceConfig& cfg) {
  if (seg.kind == SegmentKind::phase_correction) {
    throw std::invalid_argument("phase corrections are instantaneous and have no generator");
  }
  rc.validate();
  const SegmentTuning tun = segment_tuning(seg, p, rc);

  SegmentHamiltonian sh;
  sh.duration = seg.duration;

  if (rc.mode == Mode::ideal) {
    // Interaction picture at exact resonance: the generator is the bare
    // resonant coupling (or drive) with no diagonal part at all.
    if (seg.kind == SegmentKind::drive_pulse) {
      sh.matrix = build_drive(seg.transition, seg.amplitude, seg.phase, cfg);
      sh.frame = "ideal resonant drive frame (" + transition_name(seg.transition) + ")";
    } else {
      sh.matrix = coupling_only(p, tun, cfg);
      sh.frame = "ideal resonant exchange frame (" + resonator_name(seg.resonator) + " on " +
                 transition_name(seg.transition) + ")";
    }
    sh.frame_diagonal = Eigen::VectorXd::Zero(cfg.dim());
    return sh;
  }

  // Finite detuning: rotate everything at omega_ref per excitation so the
  // full Hamiltonian, couplings and drive included, is time independent.
  // The leftover free diagonal is recorded and unwound after the segment.
  const double omega_ref = p.transition_frequency(seg.transition);
  const Mat generator = omega_ref * excitation_number(cfg);
  const Mat h_free = build_free(p, tun, cfg);
  Mat h_rot = to_rotating_frame(build_static(p, tun, cfg), generator);
  if (seg.kind == SegmentKind::drive_pulse) {
    // A charge-qutrit drive talks to both ladder transitions with the same
    // amplitude; the unaddressed one sits an anharmonicity away and is the
    // leakage channel this mode is meant to expose.
    h_rot += build_drive(seg.transition, seg.amplitude, seg.phase, cfg);
    const Transition other =
        seg.transition == Transition::ge ? Transition::ea : Transition::ge;
    h_rot += build_drive(other, seg.amplitude, seg.phase, cfg);
  }
  sh.matrix = std::move(h_rot);
  sh.frame_diagonal = (h_free - generator).diagonal().real();
  sh.frame = "excitation frame at " + transition_name(seg.transition) + " frequency";
  return sh;
}

namespace {

/// Eigendecomposition of one segment generator, reused for every sample
/// time within the segment.
class SegmentPropagator {
 public:
  SegmentPropagator(const SegmentHamiltonian& sh) : sh_(sh) {
    if (!is_hermitian(sh.matrix, 1e-12)) {
      throw integrity_error("segment generator is not Hermitian");
    }
    solver_.compute(sh.matrix);
    if (solver_.info() != Eigen::Success) {
      throw physics_error("eigendecomposition of a segment generator failed");
    }
  }

  Vec at(const Vec& state, double t) const {
    const Vec in_eigenbasis = solver_.eigenvectors().adjoint() * state;
    const Vec phased =
        (solver_.eigenvalues().array() * (-t)).unaryExpr([](double x) {
          return std::exp(Complex(0.0, x));
        }).matrix().cwiseProduct(in_eigenbasis);
    Vec out = solver_.eigenvectors() * phased;
    if (sh_.frame_diagonal.size() == out.size()) {
      out = (sh_.frame_diagonal.array() * t)
                .unaryExpr([](double x) { return std::exp(Complex(0.0, x)); })
                .matrix()
                .cwiseProduct(out);
    }
    return out;
  }

 private:
  const SegmentHamiltonian& sh_;
  Eigen::SelfAdjointEigenSolver<Mat> solver_;
};

double excitation_expectation(const Vec& state, const Mat& n_exc) {
  return (state.adjoint() * n_exc * state)(0, 0).real();
}

double guard_weight(const Vec& state, const SpaceConfig& cfg, int n_target, int m_target) {
  double w = 0.0;
  for (Eigen::Index i = 0; i < state.size(); ++i) {
    const BasisLabel l = basis_label(i, cfg);
    if (l.n1 > n_target || l.n2 > m_target) w += std::norm(state(i));
  }
  return w;
}

Vec apply_phase_correction(const ScheduleSegment& seg, const Vec& state, const SpaceConfig& cfg) {
  return ideal_phase_correction(seg.theta_g, seg.theta_e, cfg).apply(state);
}

}  // namespace

Vec propagate_segment(const Vec& state, const SegmentHamiltonian& h, double duration,
                      double norm_tolerance) {
  if (state.size() != h.matrix.rows()) {
    throw std::invalid_argument("state dimension does not match the segment generator");
  }
  const SegmentPropagator prop(h);
  Vec out = prop.at(state, duration);
  if (norm_error(out) > norm_tolerance) {
    throw physics_error("norm drift " + std::to_string(norm_error(out)) +
                        " beyond tolerance after a segment");
  }
  return out;
}

Trajectory run_schedule(const Vec& initial, const Schedule& schedule, const RunConfig& rc,
                        const DeviceParams& p) {
  rc.validate();
  p.validate();
  const SpaceConfig& cfg = schedule.space;
  if (initial.size() != cfg.dim()) {
    throw std::invalid_argument("initial state dimension does not match the schedule space");
  }
  if (norm_error(initial) > rc.norm_tolerance) {
    throw physics_error("initial state is not normalized");
  }

  const Mat n_exc = excitation_number(cfg);
  Trajectory traj;
  traj.boundary_states.push_back(initial);
  traj.boundary_times.push_back(0.0);
  traj.samples.push_back({0.0, initial});
  traj.max_guard_population =
      guard_weight(initial, cfg, schedule.spec.n_target, schedule.spec.m_target);

  double t_cum = 0.0;
  Vec state = initial;
  for (std::size_t k = 0; k < schedule.segments.size(); ++k) {
    const auto& seg = schedule.segments[k];
    try {
      if (seg.kind == SegmentKind::phase_correction) {
        state = apply_phase_correction(seg, state, cfg);
      } else {
        const SegmentHamiltonian sh = make_segment_hamiltonian(seg, p, rc, cfg);
        const SegmentPropagator prop(sh);
        const double n_start = excitation_expectation(state, n_exc);
        Vec sample;
        for (int s = 1; s <= rc.samples_per_segment; ++s) {
          const double t = seg.duration * s / rc.samples_per_segment;
          sample = prop.at(state, t);
          traj.samples.push_back({t_cum + t, sample});
          traj.max_norm_drift = std::max(traj.max_norm_drift, norm_error(sample));
          if (seg.kind == SegmentKind::swap) {
            traj.max_swap_excitation_drift =
                std::max(traj.max_swap_excitation_drift,
                         std::abs(excitation_expectation(sample, n_exc) - n_start));
          }
        }
        state = std::move(sample);
        t_cum += seg.duration;
      }
    } catch (const physics_error& err) {
      throw physics_error("segment " + std::to_string(k) + " (" + segment_kind_name(seg.kind) +
                          "): " + err.what());
    }
    const double drift = norm_error(state);
    traj.max_norm_drift = std::max(traj.max_norm_drift, drift);
    if (drift > rc.norm_tolerance) {
      throw physics_error("segment " + std::to_string(k) + ": norm drift " +
                          std::to_string(drift) + " beyond tolerance " +
                          std::to_string(rc.norm_tolerance));
    }
    traj.boundary_states.push_back(state);
    traj.boundary_times.push_back(t_cum);
    traj.max_guard_population =
        std::max(traj.max_guard_population,
                 guard_weight(state, cfg, schedule.spec.n_target, schedule.spec.m_target));
  }
  return traj;
}

double cross_validate(const Vec& initial, const Schedule& schedule, const RunConfig& rc,
                      const DeviceParams& p, double dt) {
  rc.validate();
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
  const SpaceConfig& cfg = schedule.space;

  Vec exact = initial;
  Vec stepped = initial;
  double max_dev = 0.0;

  for (const auto& seg : schedule.segments) {
    if (seg.kind == SegmentKind::phase_correction) {
      exact = apply_phase_correction(seg, exact, cfg);
      stepped = apply_phase_correction(seg, stepped, cfg);
    } else {
      const SegmentHamiltonian sh = make_segment_hamiltonian(seg, p, rc, cfg);
      const SegmentPropagator prop(sh);
      exact = prop.at(exact, seg.duration);

      const auto n_steps = static_cast<long>(std::ceil(seg.duration / dt));
      const double h = seg.duration / static_cast<double>(n_steps);
      const Mat gen = Complex(0.0, -1.0) * sh.matrix;
      for (long s = 0; s < n_steps; ++s) {
        const Vec k1 = gen * stepped;
        const Vec k2 = gen * (stepped + 0.5 * h * k1);
        const Vec k3 = gen * (stepped + 0.5 * h * k2);
        const Vec k4 = gen * (stepped + h * k3);
        stepped += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      }
      if (sh.frame_diagonal.size() == stepped.size()) {
        stepped = (sh.frame_diagonal.array() * seg.duration)
                      .unaryExpr([](double x) { return std::exp(Complex(0.0, x)); })
                      .matrix()
                      .cwiseProduct(stepped);
      }
      if (norm_error(stepped) > 1e-6) {
        throw physics_error("fourth-order stepper unstable at dt=" + std::to_string(dt) +
                            ": norm drift " + std::to_string(norm_error(stepped)));
      }
    }
    max_dev = std::max(max_dev, (exact - stepped).cwiseAbs().maxCoeff());
  }
  return max_dev;
}

}  // namespace noonsim
