#include <doctest.h>

#include <cmath>
#include <random>

#include "noonsim/analysis.hpp"
#include "noonsim/ideal.hpp"

using namespace noonsim;

namespace {

Vec loaded_r1_state(int n, const SpaceConfig& cfg) {
  // (|g,0,0> + (-1)^N |e,N,0>)/sqrt(2)
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  Vec v = Vec::Zero(cfg.dim());
  v(basis_index({Level::g, 0, 0}, cfg)) = inv_sqrt2;
  v(basis_index({Level::e, n, 0}, cfg)) = (n % 2 == 0 ? 1.0 : -1.0) * inv_sqrt2;
  return v;
}

}  // namespace

TEST_SUITE_BEGIN("analysis");

TEST_CASE("fidelity basics") {
  const SpaceConfig cfg = SpaceConfig::for_protocol(2, 2);
  const Vec target = noon_target(2, 2, cfg);
  CHECK(fidelity(target, target) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(fidelity(initial_state(cfg), target) == 0.0);

  SUBCASE("symmetric and global-phase invariant") {
    std::mt19937 rng(7311);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int trial = 0; trial < 10; ++trial) {
      Vec a(cfg.dim()), b(cfg.dim());
      for (Eigen::Index i = 0; i < cfg.dim(); ++i) {
        a(i) = Complex(gauss(rng), gauss(rng));
        b(i) = Complex(gauss(rng), gauss(rng));
      }
      a /= a.norm();
      b /= b.norm();
      CHECK(fidelity(a, b) == doctest::Approx(fidelity(b, a)).epsilon(1e-12));
      const Complex phase = std::exp(Complex(0.0, gauss(rng)));
      CHECK(fidelity(phase * a, b) == doctest::Approx(fidelity(a, b)).epsilon(1e-12));
    }
  }

  SUBCASE("dimension mismatch") {
    CHECK_THROWS_AS(fidelity(Vec::Ones(3), Vec::Ones(4)), std::invalid_argument);
  }
}

TEST_CASE("reduced states and purity") {
  const SpaceConfig cfg = SpaceConfig::for_protocol(2, 2);

  SUBCASE("product state reduces to a pure projector") {
    const Vec v = basis_state({Level::g, 0, 0}, cfg);
    const Mat rho = reduced_state(v, Subsystem::qutrit, cfg);
    CHECK((rho - level_projector(Level::g)).cwiseAbs().maxCoeff() == 0.0);
  }

  SUBCASE("target state: pure qutrit, pure field") {
    const Vec v = noon_target(2, 2, cfg);
    CHECK(purity(reduced_state(v, Subsystem::qutrit, cfg)) == doctest::Approx(1.0));
    CHECK(purity(reduced_state(v, Subsystem::field, cfg)) == doctest::Approx(1.0));
  }

  SUBCASE("loaded-r1 state is maximally qutrit-field entangled") {
    const Vec v = loaded_r1_state(2, cfg);
    CHECK(purity(reduced_state(v, Subsystem::qutrit, cfg)) == doctest::Approx(0.5));
  }

  SUBCASE("reduced states are Hermitian, unit trace, positive") {
    const Vec v = loaded_r1_state(2, cfg);
    for (Subsystem s : {Subsystem::qutrit, Subsystem::r1, Subsystem::r2, Subsystem::field}) {
      const Mat rho = reduced_state(v, s, cfg);
      CHECK(is_hermitian(rho, 1e-12));
      CHECK(rho.trace().real() == doctest::Approx(1.0).epsilon(1e-12));
      Eigen::SelfAdjointEigenSolver<Mat> es(rho);
      CHECK(es.eigenvalues().minCoeff() > -1e-10);
    }
  }

  SUBCASE("reduced expectation values match lifted observables") {
    const Vec v = loaded_r1_state(2, cfg);
    const Mat n1_full = lift(number_operator(cfg.d1), Slot::r1, cfg);
    const double full = (v.adjoint() * n1_full * v)(0, 0).real();
    const Mat rho1 = reduced_state(v, Subsystem::r1, cfg);
    const double red = (rho1 * number_operator(cfg.d1)).trace().real();
    CHECK(std::abs(full - red) < 1e-10);
  }
}

TEST_CASE("photon statistics") {
  const SpaceConfig cfg = SpaceConfig::for_protocol(3, 2);

  SUBCASE("target splits the weight between N and 0") {
    const Eigen::VectorXd p = photon_statistics(noon_target(3, 2, cfg), Resonator::r1, cfg);
    CHECK(p(3) == doctest::Approx(0.5));
    CHECK(p(0) == doctest::Approx(0.5));
    CHECK(p.sum() == doctest::Approx(1.0).epsilon(1e-9));
  }

  SUBCASE("vacuum") {
    const Eigen::VectorXd p =
        photon_statistics(basis_state({Level::g, 0, 0}, cfg), Resonator::r2, cfg);
    CHECK(p(0) == 1.0);
  }

  SUBCASE("one-photon split after the first swap") {
    // (|g,0,0> - |e,1,0>)/sqrt(2)
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    Vec v = Vec::Zero(cfg.dim());
    v(basis_index({Level::g, 0, 0}, cfg)) = inv_sqrt2;
    v(basis_index({Level::e, 1, 0}, cfg)) = -inv_sqrt2;
    const Eigen::VectorXd p = photon_statistics(v, Resonator::r1, cfg);
    CHECK(p(0) == doctest::Approx(0.5));
    CHECK(p(1) == doctest::Approx(0.5));
  }
}

TEST_CASE("guard population witnesses injected leakage") {
  const SpaceConfig cfg = SpaceConfig::for_protocol(1, 1);
  Vec v = noon_target(1, 1, cfg);
  CHECK(guard_population(v, cfg, 1, 1) == 0.0);

  const double eps = 1e-6;
  v(basis_index({Level::g, 2, 0}, cfg)) = std::sqrt(eps);
  v /= v.norm();
  CHECK(guard_population(v, cfg, 1, 1) == doctest::Approx(eps).epsilon(1e-3));
}

TEST_CASE("run report collects fidelities and distributions") {
  const DeviceParams p = DeviceParams::typical();
  const RunConfig rc;
  const Schedule s = compile({2, 1}, p);
  const Trajectory traj = run_schedule(initial_state(s.space), s, rc, p);
  const RunReport rep = build_report(s, traj, rc, p);

  CHECK(rep.final_fidelity >= 1.0 - 1e-9);
  CHECK(rep.field_fidelity >= 1.0 - 1e-9);
  CHECK(rep.qutrit_purity_final == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(rep.per_boundary_fidelity.size() == s.segments.size() + 1);
  for (double f : rep.per_boundary_fidelity) {
    CHECK(f >= 1.0 - 1e-9);
    CHECK(f <= 1.0 + 1e-12);
  }
  CHECK(rep.max_boundary_deviation < 1e-9);
  CHECK(rep.photon_distribution_r1.sum() == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(rep.photon_distribution_r2.sum() == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(rep.photon_distribution_r1(2) == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(rep.photon_distribution_r2(1) == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_SUITE_END();
