#include "noonsim/hilbert.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "noonsim/errors.hpp"

namespace noonsim {

char level_char(Level l) {
  switch (l) {
    case Level::g: return 'g';
    case Level::e: return 'e';
    case Level::a: return 'a';
  }
  throw std::invalid_argument("unknown qutrit level");
}

Level level_from_char(char c) {
  switch (c) {
    case 'g': return Level::g;
    case 'e': return Level::e;
    case 'a': return Level::a;
  }
  throw std::invalid_argument(std::string("unknown qutrit level '") + c + "'");
}

std::string transition_name(Transition t) {
  return t == Transition::ge ? "ge" : "ea";
}

std::string resonator_name(Resonator r) {
  return r == Resonator::r1 ? "r1" : "r2";
}

Level lower_level(Transition t) {
  return t == Transition::ge ? Level::g : Level::e;
}

Level upper_level(Transition t) {
  return t == Transition::ge ? Level::e : Level::a;
}

void SpaceConfig::validate() const {
  if (d1 < 2 || d2 < 2) {
    throw config_error("Fock truncation must keep at least 2 levels per mode (got d1=" +
                       std::to_string(d1) + ", d2=" + std::to_string(d2) + ")");
  }
}

SpaceConfig SpaceConfig::for_protocol(int n_target, int m_target) {
  SpaceConfig cfg;
  cfg.d1 = n_target + 2;
  cfg.d2 = m_target + 2;
  return cfg;
}

void SpaceConfig::require_protocol_fit(int n_target, int m_target) const {
  validate();
  if (d1 < n_target + 2 || d2 < m_target + 2) {
    throw config_error("truncation too small for the requested photon numbers: need d1 >= " +
                       std::to_string(n_target + 2) + " and d2 >= " + std::to_string(m_target + 2) +
                       " (got d1=" + std::to_string(d1) + ", d2=" + std::to_string(d2) + ")");
  }
}

std::string BasisLabel::str() const {
  std::ostringstream os;
  os << level_char(level) << ':' << n1 << ':' << n2;
  return os.str();
}

Eigen::Index basis_index(const BasisLabel& label, const SpaceConfig& cfg) {
  cfg.validate();
  if (label.n1 < 0 || label.n1 >= cfg.d1 || label.n2 < 0 || label.n2 >= cfg.d2) {
    throw std::out_of_range("basis label " + label.str() + " outside truncation d1=" +
                            std::to_string(cfg.d1) + ", d2=" + std::to_string(cfg.d2));
  }
  const auto l = static_cast<Eigen::Index>(label.level);
  return (l * cfg.d1 + label.n1) * cfg.d2 + label.n2;
}

BasisLabel basis_label(Eigen::Index index, const SpaceConfig& cfg) {
  cfg.validate();
  if (index < 0 || index >= cfg.dim()) {
    throw std::out_of_range("flat index " + std::to_string(index) + " outside dimension " +
                            std::to_string(cfg.dim()));
  }
  BasisLabel label;
  label.n2 = static_cast<int>(index % cfg.d2);
  index /= cfg.d2;
  label.n1 = static_cast<int>(index % cfg.d1);
  label.level = static_cast<Level>(static_cast<int>(index / cfg.d1));
  return label;
}

Vec basis_state(const BasisLabel& label, const SpaceConfig& cfg) {
  Vec v = Vec::Zero(cfg.dim());
  v(basis_index(label, cfg)) = 1.0;
  return v;
}

Mat annihilation(int d) {
  if (d < 2) {
    throw config_error("annihilation operator needs at least 2 Fock levels, got d=" + std::to_string(d));
  }
  Mat a = Mat::Zero(d, d);
  for (int n = 1; n < d; ++n) {
    a(n - 1, n) = std::sqrt(static_cast<double>(n));
  }
  return a;
}

Mat creation(int d) { return annihilation(d).adjoint(); }

Mat number_operator(int d) {
  Mat n = Mat::Zero(d, d);
  for (int k = 0; k < d; ++k) n(k, k) = static_cast<double>(k);
  return n;
}

Mat transition_lowering(Level from, Level to) {
  const bool ok = (from == Level::e && to == Level::g) || (from == Level::a && to == Level::e);
  if (!ok) {
    throw std::invalid_argument(std::string("unsupported qutrit transition ") + level_char(from) +
                                "->" + level_char(to) + " (only e->g and a->e lower)");
  }
  Mat s = Mat::Zero(3, 3);
  s(static_cast<int>(to), static_cast<int>(from)) = 1.0;
  return s;
}

Mat transition_lowering(Transition t) {
  return transition_lowering(upper_level(t), lower_level(t));
}

Mat transition_raising(Transition t) { return transition_lowering(t).adjoint(); }

Mat level_projector(Level l) {
  Mat p = Mat::Zero(3, 3);
  p(static_cast<int>(l), static_cast<int>(l)) = 1.0;
  return p;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Mat lift(const Mat& op, Slot slot, const SpaceConfig& cfg) {
  cfg.validate();
  const Eigen::Index want = slot == Slot::qutrit ? 3 : (slot == Slot::r1 ? cfg.d1 : cfg.d2);
  if (op.rows() != want || op.cols() != want) {
    throw std::invalid_argument("lift: operator is " + std::to_string(op.rows()) + "x" +
                                std::to_string(op.cols()) + " but the slot has dimension " +
                                std::to_string(want));
  }
  const Mat iq = Mat::Identity(3, 3);
  const Mat i1 = Mat::Identity(cfg.d1, cfg.d1);
  const Mat i2 = Mat::Identity(cfg.d2, cfg.d2);
  switch (slot) {
    case Slot::qutrit: return kron(op, kron(i1, i2));
    case Slot::r1: return kron(iq, kron(op, i2));
    case Slot::r2: return kron(iq, kron(i1, op));
  }
  throw std::invalid_argument("unknown slot");
}

double norm_error(const Vec& v) { return std::abs(v.norm() - 1.0); }

bool is_hermitian(const Mat& m, double tol) {
  if (m.rows() != m.cols()) return false;
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol * scale;
}

double unitarity_error(const Mat& u) {
  const Mat residual = u.adjoint() * u - Mat::Identity(u.rows(), u.cols());
  return residual.cwiseAbs().maxCoeff();
}

}  // namespace noonsim
