#pragma once

// Closed-form boundary states for the loading protocol, written directly
// from the per-branch amplitude bookkeeping and independent of the gate
// composition in the library. The rules, applied by hand:
//
//   pi pulse on x<->y:              |x> -> -i|y>,      |y> -> -i|x>
//   full swap on rung n:            |upper, n-1> -> -i|lower's partner...>
//     more precisely e<->a on r_i:  |a, n-1> -> -i|e, n>, |e, n> -> -i|a, n-1>
//     and g<->e on r_i:             |e, n-1> -> -i|g, n>, |g, n> -> -i|e, n-1>
//   phase correction:               |g> -> e^{i theta_g}|g>, |e> -> e^{i theta_e}|e>
//
// Starting from (|g,0,0> + |e,0,0>)/sqrt(2), the r1 branch after step j of
// the first part carries (-1)^j |e,j,0>, the parked branch after the
// g<->e exchange carries -(-1)^N i |g,N,0>, and the r2 pump branch after
// loading k photons carries (-1)^{k+1} i |e,0,k>.

#include <complex>
#include <string>
#include <vector>

#include "noonsim/hilbert.hpp"

namespace checkpoints {

using noonsim::BasisLabel;
using noonsim::Complex;
using noonsim::Level;
using noonsim::SpaceConfig;
using noonsim::Vec;

struct Checkpoint {
  std::size_t boundary = 0;
  std::string name;
  Vec state;
};

inline double sign_pow(int k) { return k % 2 == 0 ? 1.0 : -1.0; }

inline Vec two_term_state(const SpaceConfig& cfg, const BasisLabel& l1, Complex c1,
                          const BasisLabel& l2, Complex c2) {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  Vec v = Vec::Zero(cfg.dim());
  v(basis_index(l1, cfg)) = c1 * inv_sqrt2;
  v(basis_index(l2, cfg)) = c2 * inv_sqrt2;
  return v;
}

/// Every boundary state of the compiled (N, M) schedule, in order.
/// Boundary indices: 2j-1 / 2j for the first-part pulse/swap of step j,
/// 2N+1 for the branch exchange, then 2N+2k / 2N+2k+1 for the second-part
/// pulse/swap of loop k, 2N+2M for the phase correction, 2N+2M+1 final.
inline std::vector<Checkpoint> protocol_checkpoints(int n, int m, const SpaceConfig& cfg) {
  const Complex i{0.0, 1.0};
  std::vector<Checkpoint> cps;
  const auto add = [&](std::size_t boundary, const std::string& name, const Vec& v) {
    cps.push_back({boundary, name, v});
  };

  add(0, "initial",
      two_term_state(cfg, {Level::g, 0, 0}, 1.0, {Level::e, 0, 0}, 1.0));

  // First part, step j: pump the |e| branch to |a>, then swap it into r1.
  for (int j = 1; j <= n; ++j) {
    add(2 * j - 1, "r1_pump_" + std::to_string(j),
        two_term_state(cfg, {Level::g, 0, 0}, 1.0, {Level::a, j - 1, 0},
                       sign_pow(j - 1) * (-i)));
    add(2 * j, j == n ? "r1_loaded" : "r1_photon_" + std::to_string(j),
        two_term_state(cfg, {Level::g, 0, 0}, 1.0, {Level::e, j, 0}, sign_pow(j)));
  }

  // Branch exchange: the loaded branch parks in |g>, the vacuum branch
  // moves to |e>.
  add(2 * n + 1, "branches_exchanged",
      two_term_state(cfg, {Level::e, 0, 0}, -i, {Level::g, n, 0}, -sign_pow(n) * i));

  const Complex parked = -sign_pow(n) * i;
  for (int k = 1; k <= m - 1; ++k) {
    add(2 * n + 2 * k, "r2_pump_" + std::to_string(k),
        two_term_state(cfg, {Level::a, 0, k - 1}, sign_pow(k), {Level::g, n, 0}, parked));
    add(2 * n + 2 * k + 1, k == m - 1 ? "r2_loaded" : "r2_photon_" + std::to_string(k),
        two_term_state(cfg, {Level::e, 0, k}, sign_pow(k + 1) * i, {Level::g, n, 0}, parked));
  }

  add(2 * n + 2 * m, "phase_corrected",
      two_term_state(cfg, {Level::e, 0, m - 1}, i, {Level::g, n, 0}, 1.0));
  add(2 * n + 2 * m + 1, "noon",
      two_term_state(cfg, {Level::g, n, 0}, 1.0, {Level::g, 0, m}, 1.0));
  return cps;
}

}  // namespace checkpoints
