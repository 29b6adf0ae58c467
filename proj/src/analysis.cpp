#include "noonsim/analysis.hpp"

#include <cmath>

#include "noonsim/errors.hpp"
#include "noonsim/ideal.hpp"

namespace noonsim {

double fidelity(const Vec& state, const Vec& target) {
  if (state.size() != target.size()) {
    throw std::invalid_argument("fidelity: dimension mismatch");
  }
  return std::norm(target.dot(state));
}

Mat reduced_state(const Vec& state, Subsystem s, const SpaceConfig& cfg) {
  cfg.validate();
  if (state.size() != cfg.dim()) {
    throw std::invalid_argument("reduced_state: dimension mismatch");
  }
  const auto amp = [&](int l, int n1, int n2) {
    return state(basis_index({static_cast<Level>(l), n1, n2}, cfg));
  };
  switch (s) {
    case Subsystem::qutrit: {
      Mat rho = Mat::Zero(3, 3);
      for (int l = 0; l < 3; ++l)
        for (int lp = 0; lp < 3; ++lp)
          for (int n1 = 0; n1 < cfg.d1; ++n1)
            for (int n2 = 0; n2 < cfg.d2; ++n2)
              rho(l, lp) += amp(l, n1, n2) * std::conj(amp(lp, n1, n2));
      return rho;
    }
    case Subsystem::r1: {
      Mat rho = Mat::Zero(cfg.d1, cfg.d1);
      for (int n = 0; n < cfg.d1; ++n)
        for (int np = 0; np < cfg.d1; ++np)
          for (int l = 0; l < 3; ++l)
            for (int n2 = 0; n2 < cfg.d2; ++n2)
              rho(n, np) += amp(l, n, n2) * std::conj(amp(l, np, n2));
      return rho;
    }
    case Subsystem::r2: {
      Mat rho = Mat::Zero(cfg.d2, cfg.d2);
      for (int n = 0; n < cfg.d2; ++n)
        for (int np = 0; np < cfg.d2; ++np)
          for (int l = 0; l < 3; ++l)
            for (int n1 = 0; n1 < cfg.d1; ++n1)
              rho(n, np) += amp(l, n1, n) * std::conj(amp(l, n1, np));
      return rho;
    }
    case Subsystem::field: {
      const int df = cfg.d1 * cfg.d2;
      Mat rho = Mat::Zero(df, df);
      for (int n1 = 0; n1 < cfg.d1; ++n1)
        for (int n2 = 0; n2 < cfg.d2; ++n2)
          for (int m1 = 0; m1 < cfg.d1; ++m1)
            for (int m2 = 0; m2 < cfg.d2; ++m2)
              for (int l = 0; l < 3; ++l)
                rho(n1 * cfg.d2 + n2, m1 * cfg.d2 + m2) +=
                    amp(l, n1, n2) * std::conj(amp(l, m1, m2));
      return rho;
    }
  }
  throw std::invalid_argument("unknown subsystem");
}

double purity(const Mat& rho) { return (rho * rho).trace().real(); }

Eigen::VectorXd photon_statistics(const Vec& state, Resonator r, const SpaceConfig& cfg) {
  cfg.validate();
  if (state.size() != cfg.dim()) {
    throw std::invalid_argument("photon_statistics: dimension mismatch");
  }
  const int d = r == Resonator::r1 ? cfg.d1 : cfg.d2;
  Eigen::VectorXd p = Eigen::VectorXd::Zero(d);
  for (Eigen::Index i = 0; i < state.size(); ++i) {
    const BasisLabel l = basis_label(i, cfg);
    p(r == Resonator::r1 ? l.n1 : l.n2) += std::norm(state(i));
  }
  return p;
}

Eigen::VectorXd level_populations(const Vec& state, const SpaceConfig& cfg) {
  Eigen::VectorXd p = Eigen::VectorXd::Zero(3);
  for (Eigen::Index i = 0; i < state.size(); ++i) {
    p(static_cast<int>(basis_label(i, cfg).level)) += std::norm(state(i));
  }
  return p;
}

double mean_photons(const Vec& state, Resonator r, const SpaceConfig& cfg) {
  const Eigen::VectorXd p = photon_statistics(state, r, cfg);
  double mean = 0.0;
  for (Eigen::Index n = 0; n < p.size(); ++n) mean += static_cast<double>(n) * p(n);
  return mean;
}

double guard_population(const Vec& state, const SpaceConfig& cfg, int n_target, int m_target) {
  double w = 0.0;
  for (Eigen::Index i = 0; i < state.size(); ++i) {
    const BasisLabel l = basis_label(i, cfg);
    if (l.n1 > n_target || l.n2 > m_target) w += std::norm(state(i));
  }
  return w;
}

RunReport build_report(const Schedule& schedule, const Trajectory& traj, const RunConfig& rc,
                       const DeviceParams& p) {
  if (traj.boundary_states.size() != schedule.segments.size() + 1) {
    throw std::invalid_argument("trajectory does not match the schedule");
  }
  const SpaceConfig& cfg = schedule.space;
  RunReport rep;
  rep.n_target = schedule.spec.n_target;
  rep.m_target = schedule.spec.m_target;
  rep.mode = mode_name(rc.mode);
  rep.delta_over_g = rc.delta_over_g;
  rep.d1 = cfg.d1;
  rep.d2 = cfg.d2;
  rep.params = p;
  rep.timing = schedule.timing;

  const Vec target = noon_target(rep.n_target, rep.m_target, cfg);
  const Vec& final_state = traj.boundary_states.back();
  rep.final_fidelity = fidelity(final_state, target);

  const Mat rho_field = reduced_state(final_state, Subsystem::field, cfg);
  Vec field_target = Vec::Zero(cfg.d1 * cfg.d2);
  field_target(rep.n_target * cfg.d2 + 0) = 1.0 / std::sqrt(2.0);
  field_target(0 * cfg.d2 + rep.m_target) = 1.0 / std::sqrt(2.0);
  rep.field_fidelity = (field_target.adjoint() * rho_field * field_target)(0, 0).real();

  rep.qutrit_purity_final = purity(reduced_state(final_state, Subsystem::qutrit, cfg));

  rep.per_boundary_fidelity.reserve(traj.boundary_states.size());
  for (std::size_t b = 0; b < traj.boundary_states.size(); ++b) {
    rep.per_boundary_fidelity.push_back(
        fidelity(traj.boundary_states[b], schedule.expected_states.at(b)));
    rep.max_boundary_deviation =
        std::max(rep.max_boundary_deviation,
                 (traj.boundary_states[b] - schedule.expected_states.at(b)).cwiseAbs().maxCoeff());
  }

  rep.photon_distribution_r1 = photon_statistics(final_state, Resonator::r1, cfg);
  rep.photon_distribution_r2 = photon_statistics(final_state, Resonator::r2, cfg);
  rep.max_norm_drift = traj.max_norm_drift;
  rep.max_swap_excitation_drift = traj.max_swap_excitation_drift;
  rep.max_guard_population = traj.max_guard_population;
  return rep;
}

}  // namespace noonsim
