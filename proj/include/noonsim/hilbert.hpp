#pragma once

#include <Eigen/Dense>

#include <complex>
#include <string>

namespace noonsim {

using Complex = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

inline constexpr Complex kImag{0.0, 1.0};

/// Qutrit levels in energy order. Only the g<->e and e<->a transitions are
/// dipole-allowed (ladder-type level structure); g<->a is never driven or
/// coupled directly.
enum class Level : int { g = 0, e = 1, a = 2 };

enum class Transition : int { ge = 0, ea = 1 };

enum class Resonator : int { r1 = 0, r2 = 1 };

/// Subsystem slot in the fixed tensor ordering qutrit (x) r1 (x) r2.
enum class Slot : int { qutrit = 0, r1 = 1, r2 = 2 };

char level_char(Level l);
Level level_from_char(char c);
std::string transition_name(Transition t);
std::string resonator_name(Resonator r);
Level lower_level(Transition t);
Level upper_level(Transition t);

/// Fock truncation of the two resonator modes. The joint space is
/// qutrit (x) Fock(d1) (x) Fock(d2), total dimension 3*d1*d2, with a fixed
/// level-major basis ordering used everywhere including file outputs.
struct SpaceConfig {
  int d1 = 2;  ///< number of Fock levels kept for r1 (0 .. d1-1)
  int d2 = 2;  ///< number of Fock levels kept for r2

  Eigen::Index dim() const { return 3 * static_cast<Eigen::Index>(d1) * d2; }
  void validate() const;

  /// Truncation for an (N, M) loading run: guard levels sit above the
  /// highest populated Fock state so leakage is observable, never clipped.
  static SpaceConfig for_protocol(int n_target, int m_target);
  void require_protocol_fit(int n_target, int m_target) const;
};

/// One basis ket |level, n1, n2>.
struct BasisLabel {
  Level level = Level::g;
  int n1 = 0;
  int n2 = 0;

  std::string str() const;  ///< "g:0:1" style, level:n1:n2
};

/// Flat index of a basis label: level-major, then n1, then n2.
Eigen::Index basis_index(const BasisLabel& label, const SpaceConfig& cfg);
BasisLabel basis_label(Eigen::Index index, const SpaceConfig& cfg);

/// Unit vector for one basis label.
Vec basis_state(const BasisLabel& label, const SpaceConfig& cfg);

/// Single-mode annihilation operator, d x d: a|n> = sqrt(n)|n-1>, a|0> = 0.
Mat annihilation(int d);
Mat creation(int d);
Mat number_operator(int d);

/// 3x3 lowering operator for one qutrit transition. Only (e,g) and (a,e)
/// are valid (from, to) pairs; the adjoint gives the raising operator.
Mat transition_lowering(Level from, Level to);
Mat transition_lowering(Transition t);
Mat transition_raising(Transition t);
Mat level_projector(Level l);

Mat kron(const Mat& a, const Mat& b);

/// Embed a single-subsystem operator into the full space, identity on the
/// other two factors. Lifts of operators on distinct slots commute.
Mat lift(const Mat& op, Slot slot, const SpaceConfig& cfg);

double norm_error(const Vec& v);              ///< | ||v||_2 - 1 |
bool is_hermitian(const Mat& m, double tol);  ///< tol is relative to scale
double unitarity_error(const Mat& u);         ///< max| U^dag U - I |

}  // namespace noonsim
