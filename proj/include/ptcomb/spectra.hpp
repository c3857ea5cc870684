#pragma once

#include <vector>

#include "ptcomb/band_condition.hpp"
#include "ptcomb/cell.hpp"

namespace ptcomb {

enum class EdgeKind { crossing, tangency, range_boundary };

/// Allowed band [eps_lo, eps_hi]: |B| <= 1 throughout. A zero-width
/// interval marks an isolated touch point (B tangent to +-1 inside a gap).
struct BandInterval {
  double eps_lo = 0.0;
  double eps_hi = 0.0;
  EdgeKind lo_kind = EdgeKind::crossing;
  EdgeKind hi_kind = EdgeKind::crossing;
};

/// Maximal disjoint intervals of [lo, hi] where B in [-1, 1]. Crossing
/// edges bisected to 1e-10; tangencies never split a band.
std::vector<BandInterval> allowed_bands(const UnitCell& cell, double lo, double hi);

/// Energies at fixed Bloch number: solutions of B(eps) = cos(N q_a),
/// ascending. Flags are filled by band_table's post-pass, false here.
struct DispersionPoint {
  double q_a = 0.0;  // per-site Qa in [0, pi/N]
  std::vector<double> energies;
  std::vector<bool> discontinuity_flags;
};

DispersionPoint dispersion(const UnitCell& cell, double q_a, double lo, double hi);

/// Uniform Q grid over [0, pi/N]; per-Q ascending energies (the paper's
/// band labelling, discontinuous branches allowed); the post-pass flags a
/// sample when a branch jumps by more than 10x its median step.
std::vector<DispersionPoint> band_table(const UnitCell& cell, int q_samples,
                                        double lo, double hi);

/// Density of states per unit eps per site spacing:
/// rho = |B'| / (N pi sqrt(1 - B^2)); a full band carries 1/N states per
/// site, i.e. one state per N-site cell.
struct DosPoint {
  double eps = 0.0;
  double density = 0.0;
  bool van_hove = false;  // interior extremum of B: rho -> 0 anomaly
};

/// Throws std::domain_error when |B| >= 1 - 1e-12 (outside any band).
DosPoint dos(const UnitCell& cell, Epsilon eps);

}  // namespace ptcomb
