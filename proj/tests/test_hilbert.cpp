#include <doctest.h>

#include <random>

#include "noonsim/errors.hpp"
#include "noonsim/hilbert.hpp"

using namespace noonsim;

TEST_SUITE_BEGIN("hilbert");

TEST_CASE("basis ordering is level-major, then n1, then n2") {
  const SpaceConfig cfg{4, 4};
  CHECK(basis_index({Level::g, 0, 0}, cfg) == 0);
  CHECK(basis_index({Level::a, 3, 3}, cfg) == cfg.dim() - 1);
  CHECK(basis_index({Level::e, 1, 0}, cfg) == 20);

  // Explicit enumeration in the declared order.
  Eigen::Index flat = 0;
  for (int l = 0; l < 3; ++l)
    for (int n1 = 0; n1 < cfg.d1; ++n1)
      for (int n2 = 0; n2 < cfg.d2; ++n2)
        CHECK(basis_index({static_cast<Level>(l), n1, n2}, cfg) == flat++);
}

TEST_CASE("basis_index and basis_label round-trip over the whole range") {
  const SpaceConfig cfg{5, 3};
  for (Eigen::Index i = 0; i < cfg.dim(); ++i) {
    const BasisLabel l = basis_label(i, cfg);
    CHECK(basis_index(l, cfg) == i);
  }
  CHECK_THROWS_AS((basis_index({Level::g, 5, 0}, cfg)), std::out_of_range);
  CHECK_THROWS_AS((basis_index({Level::g, 0, -1}, cfg)), std::out_of_range);
  CHECK_THROWS_AS(basis_label(cfg.dim(), cfg), std::out_of_range);
}

TEST_CASE("annihilation acts as sqrt(n) ladder") {
  const int d = 6;
  const Mat a = annihilation(d);
  const Mat ad = creation(d);

  // a|0> = 0
  Vec vac = Vec::Zero(d);
  vac(0) = 1.0;
  CHECK((a * vac).norm() == 0.0);

  // <n-1|a|n> = sqrt(n) exactly in floating point
  for (int n = 1; n < d; ++n) {
    CHECK(a(n - 1, n).real() == std::sqrt(double(n)));
  }

  // a^dag a = diag(n)
  const Mat num = ad * a;
  for (int n = 0; n < d; ++n) {
    CHECK(num(n, n).real() == doctest::Approx(double(n)));
  }

  // [a, a^dag] = 1 except on the last kept level, where truncation breaks it
  const Mat comm = a * ad - ad * a;
  for (int n = 0; n < d - 1; ++n) {
    CHECK(comm(n, n).real() == doctest::Approx(1.0));
  }
  CHECK(comm(d - 1, d - 1).real() == doctest::Approx(1.0 - d));

  CHECK_THROWS_AS(annihilation(1), config_error);
}

TEST_CASE("transition operators") {
  const Vec a_level = (Vec(3) << 0, 0, 1).finished();
  const Vec g_level = (Vec(3) << 1, 0, 0).finished();

  const Mat lower_ea = transition_lowering(Level::a, Level::e);
  CHECK(((lower_ea * a_level) - (Vec(3) << 0, 1, 0).finished()).norm() == 0.0);
  CHECK((lower_ea * g_level).norm() == 0.0);

  const Mat lower_ge = transition_lowering(Transition::ge);
  const Mat proj_e = lower_ge.adjoint() * lower_ge;
  CHECK((proj_e - level_projector(Level::e)).norm() == 0.0);

  CHECK_THROWS_AS(transition_lowering(Level::a, Level::g), std::invalid_argument);
  CHECK_THROWS_AS(transition_lowering(Level::g, Level::e), std::invalid_argument);
}

TEST_CASE("lift embeds with identity elsewhere and commutes across slots") {
  const SpaceConfig cfg{3, 4};
  CHECK((lift(Mat::Identity(3, 3), Slot::qutrit, cfg) - Mat::Identity(cfg.dim(), cfg.dim()))
            .norm() == 0.0);

  const Mat a1 = lift(annihilation(cfg.d1), Slot::r1, cfg);
  const Mat a2d = lift(creation(cfg.d2), Slot::r2, cfg);
  CHECK((a1 * a2d - a2d * a1).norm() == 0.0);

  // <e,1,0| a1^dag sigma_ea^- |a,0,0> = 1
  const Mat op = lift(creation(cfg.d1), Slot::r1, cfg) *
                 lift(transition_lowering(Transition::ea), Slot::qutrit, cfg);
  const Vec in = basis_state({Level::a, 0, 0}, cfg);
  const Vec out = basis_state({Level::e, 1, 0}, cfg);
  CHECK(out.dot(op * in).real() == 1.0);

  CHECK_THROWS_AS(lift(Mat::Identity(2, 2), Slot::qutrit, cfg), std::invalid_argument);
}

TEST_CASE("lift preserves hermiticity and same-slot commutators") {
  const SpaceConfig cfg{3, 3};
  const Mat a = annihilation(cfg.d1);
  const Mat h_small = a + a.adjoint().eval();
  CHECK(is_hermitian(lift(h_small, Slot::r1, cfg), 1e-15));

  const Mat comm_small = a * a.adjoint() - a.adjoint() * a;
  const Mat comm_lifted = lift(a, Slot::r1, cfg) * lift(a.adjoint(), Slot::r1, cfg) -
                          lift(a.adjoint(), Slot::r1, cfg) * lift(a, Slot::r1, cfg);
  CHECK((comm_lifted - lift(comm_small, Slot::r1, cfg)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("random unitaries preserve the norm of random states") {
  const SpaceConfig cfg{3, 3};
  std::mt19937 rng(20240611);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const auto random_state = [&] {
    Vec v(cfg.dim());
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = Complex(gauss(rng), gauss(rng));
    return Vec(v / v.norm());
  };
  const auto random_hermitian = [&] {
    Mat m(cfg.dim(), cfg.dim());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = Complex(gauss(rng), gauss(rng));
    return Mat(0.5 * (m + m.adjoint().eval()));
  };

  for (int trial = 0; trial < 20; ++trial) {
    const Mat h = random_hermitian();
    Eigen::SelfAdjointEigenSolver<Mat> es(h);
    const Mat u = es.eigenvectors() *
                  (es.eigenvalues().array() * Complex(0.0, -1.0)).exp().matrix().asDiagonal() *
                  es.eigenvectors().adjoint();
    CHECK(unitarity_error(u) < 1e-13);
    CHECK(norm_error(u * random_state()) < 1e-10);
  }
}

TEST_CASE("space config guards") {
  CHECK_THROWS_AS((SpaceConfig{1, 2}.validate()), config_error);
  const SpaceConfig cfg = SpaceConfig::for_protocol(5, 5);
  CHECK(cfg.d1 == 7);
  CHECK(cfg.d2 == 7);
  CHECK(cfg.dim() == 147);
  CHECK_THROWS_AS((SpaceConfig{3, 3}.require_protocol_fit(2, 2)), config_error);
}

TEST_SUITE_END();
